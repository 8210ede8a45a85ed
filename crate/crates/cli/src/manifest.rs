//! Manifest files: a TOML document naming a manifold and the parameters of
//! the computation.
//!
//! ```toml
//! splice = "trefoil"          # or builtin = "T3", surgery = "4_1", inline = "< ... >"
//! phi = [0, 0, 1]
//! euler = [0, 0, 1]
//! groups = ["Z/2", "Z/3", { name = "V4", table = "4 0 1 2 3 1 0 3 2 2 3 0 1 3 2 1 0 1 2" }]
//! graph_manifold = true
//! output = "report.json"
//!
//! [cone]
//! pairing = [1, 1]
//! class = ["1/2", ["1.414", "1.415"]]
//! ```

use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use symcirc::covers::{builtin_group, parse_group_text, FiniteGroup};
use symcirc::homology::RealCoord;
use symcirc::presentations::{builtin_knot, parse_presentation, splice_t3, three_torus, zero_surgery, KnotData, Presentation};

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub inline: Option<String>,
    pub builtin: Option<String>,
    pub splice: Option<String>,
    pub surgery: Option<String>,
    pub phi: Option<Vec<i64>>,
    pub euler: Option<Vec<i64>>,
    /// Torsion coordinates of the Euler class, in Smith-form order.
    pub euler_torsion: Option<Vec<i64>>,
    #[serde(default)]
    pub groups: Vec<GroupSpec>,
    #[serde(default)]
    pub graph_manifold: bool,
    #[serde(default)]
    pub k_zero: bool,
    pub output: Option<PathBuf>,
    /// Knot polynomial for `splice-sw`, coefficients from `z⁰` upward.
    pub knot_polynomial: Option<Vec<i64>>,
    pub cone: Option<ConeSpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Name(String),
    Table { name: String, table: String },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeSpec {
    pub pairing: Vec<i64>,
    pub class: Vec<CoordSpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoordSpec {
    Exact(String),
    Interval(String, String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestError(pub String);

impl std::fmt::Display for ManifestError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ManifestError {}

fn err<T>(msg: impl Into<String>) -> Result<T, ManifestError> {
    Err(ManifestError(msg.into()))
}

/// The resolved manifold.
#[derive(Clone, Debug)]
pub struct Manifold {
    /// `inline`, `builtin:<name>`, `splice:<knot>` or `surgery:<knot>`.
    pub source: String,
    pub presentation: Presentation,
    pub knot: Option<KnotData>,
}

impl Manifest {
    pub fn parse(text: &str) -> Result<Manifest, ManifestError> {
        toml::from_str(text).map_err(|e| ManifestError(format!("unparsable manifest: {}", e.message())))
    }

    pub fn load(path: &Path) -> Result<Manifest, ManifestError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ManifestError(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn manifold(&self) -> Result<Manifold, ManifestError> {
        let sources = [&self.inline, &self.builtin, &self.splice, &self.surgery];
        if sources.iter().filter(|s| s.is_some()).count() != 1 {
            return err("exactly one of `inline`, `builtin`, `splice`, `surgery` is required");
        }
        let knot = |name: &str| builtin_knot(name).ok_or_else(|| ManifestError(format!("unknown knot `{name}`")));
        let core = |e: symcirc::Error| ManifestError(e.to_string());
        if let Some(text) = &self.inline {
            let p = parse_presentation(text).map_err(core)?;
            return Ok(Manifold {
                source: "inline".into(),
                presentation: p,
                knot: None,
            });
        }
        if let Some(name) = &self.builtin {
            let key = name.to_ascii_lowercase();
            let presentation = match key.as_str() {
                "t3" | "three-torus" | "t^3" => three_torus(),
                _ => knot(name)?.presentation,
            };
            return Ok(Manifold {
                source: format!("builtin:{name}"),
                presentation,
                knot: None,
            });
        }
        if let Some(name) = &self.splice {
            let k = knot(name)?;
            return Ok(Manifold {
                source: format!("splice:{}", k.name),
                presentation: splice_t3(&k).map_err(core)?,
                knot: Some(k),
            });
        }
        let name = self.surgery.as_ref().expect("one source present");
        let k = knot(name)?;
        Ok(Manifold {
            source: format!("surgery:{}", k.name),
            presentation: zero_surgery(&k).map_err(core)?,
            knot: Some(k),
        })
    }

    pub fn groups(&self) -> Result<Vec<FiniteGroup>, ManifestError> {
        self.groups
            .iter()
            .map(|g| match g {
                GroupSpec::Name(n) => builtin_group(n).ok_or_else(|| ManifestError(format!("unknown group `{n}`"))),
                GroupSpec::Table { name, table } => {
                    parse_group_text(name, table).map_err(|e| ManifestError(e.to_string()))
                }
            })
            .collect()
    }

    pub fn cone_input(&self) -> Result<(Vec<RealCoord>, Vec<BigInt>), ManifestError> {
        let Some(c) = &self.cone else {
            return err("`cone` needs a [cone] table with `pairing` and `class`");
        };
        let coords = c
            .class
            .iter()
            .map(|x| match x {
                CoordSpec::Exact(s) => Ok(RealCoord::Exact(parse_rational(s)?)),
                CoordSpec::Interval(lo, hi) => {
                    let (lo, hi) = (parse_rational(lo)?, parse_rational(hi)?);
                    if lo > hi {
                        return err("interval with lo > hi");
                    }
                    Ok(RealCoord::Interval { lo, hi })
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok((coords, c.pairing.iter().map(|&x| BigInt::from(x)).collect()))
    }
}

/// `p/q`, an integer, or a finite decimal.
pub fn parse_rational(s: &str) -> Result<BigRational, ManifestError> {
    let s = s.trim();
    let bad = || ManifestError(format!("not a rational number: `{s}`"));
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = int.starts_with('-');
        let whole = BigInt::from_str(if int.is_empty() || int == "-" { "0" } else { int }).map_err(|_| bad())?;
        let den = BigInt::from(10).pow(frac.len() as u32);
        let f = BigRational::new(BigInt::from_str(frac).map_err(|_| bad())?, den);
        let w = BigRational::from_integer(whole);
        return Ok(if neg { w - f } else { w + f });
    }
    BigRational::from_str(s).map_err(|_| bad())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exactly_one_source() {
        let m = Manifest::parse("builtin = \"T3\"\nsplice = \"trefoil\"").unwrap();
        assert!(m.manifold().is_err());
        assert!(Manifest::default().manifold().is_err());
        let m = Manifest::parse("splice = \"3_1\"").unwrap();
        assert_eq!(m.manifold().unwrap().source, "splice:trefoil");
    }

    #[test]
    fn unknown_fields_rejected() {
        assert!(Manifest::parse("builtin = \"T3\"\nfoo = 1").is_err());
    }

    #[test]
    fn groups_and_rationals() {
        let m = Manifest::parse(
            "builtin = \"T3\"\ngroups = [\"Z/2\", { name = \"C2\", table = \"2 0 1 1 0 1\" }]",
        )
        .unwrap();
        let g = m.groups().unwrap();
        assert_eq!(g.iter().map(|g| g.order()).collect::<Vec<_>>(), vec![2, 2]);
        assert_eq!(parse_rational("-1.25").unwrap(), BigRational::new((-5).into(), 4.into()));
        assert_eq!(parse_rational("3/6").unwrap(), BigRational::new(1.into(), 2.into()));
        assert!(parse_rational("x").is_err());
    }
}
