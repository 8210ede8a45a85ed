//! Subcommand execution.

use clap::ValueEnum;
use num_bigint::BigInt;
use serde_json::{json, Value};
use symcirc::alexander::{
    alexander_multivariable, alexander_one_variable, alexander_one_variable_fox, is_symmetric,
    twisted_alexander,
};
use symcirc::covers::{enumerate_epimorphisms, induced_class, reidemeister_schreier, FiniteHom};
use symcirc::exactalg::{vars, LaurentPoly};
use symcirc::homology::{
    circle_bundle_invariants, decompose_positive, h1, intersection_form, ker_pairing, CohClass1, EulerClass,
    H1Data, RealClass2,
};
use symcirc::obstruction::{degree_report, verdict, Flags, Status};
use symcirc::presentations::Presentation;
use symcirc::swbridge::{
    baldridge_pushforward, coefficient_sum_vanishes, kzero_admissible, splice_sw, sw_from_alexander,
};

use crate::manifest::{Manifest, ManifestError, Manifold};
use crate::report::{self, SCHEMA_VERSION};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum)]
pub enum Command {
    H1,
    Bundle,
    Alex,
    Talex,
    Covers,
    Sw,
    SpliceSw,
    Obstruct,
    Cone,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::H1 => "h1",
            Command::Bundle => "bundle",
            Command::Alex => "alex",
            Command::Talex => "talex",
            Command::Covers => "covers",
            Command::Sw => "sw",
            Command::SpliceSw => "splice-sw",
            Command::Obstruct => "obstruct",
            Command::Cone => "cone",
        }
    }
}

pub const EXIT_COMPUTED: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INDETERMINATE: i32 = 3;

/// Report document and process exit code.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub exit_code: i32,
}

struct Computed {
    status: &'static str,
    exit_code: i32,
    result: Value,
}

fn computed(result: Value) -> Computed {
    Computed {
        status: "computed",
        exit_code: EXIT_COMPUTED,
        result,
    }
}

type Res<T> = Result<T, ManifestError>;

fn core(e: symcirc::Error) -> ManifestError {
    ManifestError(e.to_string())
}

pub fn error_report(command: Command, message: &str, status: &str) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command.name(),
        "status": status,
        "error": message,
    })
}

pub fn run(command: Command, manifest: &Manifest) -> Outcome {
    let manifold = match manifest.manifold() {
        Ok(m) => m,
        Err(e) => {
            return Outcome {
                report: error_report(command, &e.0, "error"),
                exit_code: EXIT_INPUT,
            }
        }
    };
    let header = json!({
        "source": manifold.source,
        "presentation": manifold.presentation.to_string(),
        "generators": manifold.presentation.ngens(),
        "relators": manifold.presentation.nrels(),
    });
    match execute(command, manifest, &manifold) {
        Ok(c) => Outcome {
            report: json!({
                "schema_version": SCHEMA_VERSION,
                "command": command.name(),
                "manifold": header,
                "status": c.status,
                "result": c.result,
            }),
            exit_code: c.exit_code,
        },
        Err(e) => {
            let mut report = error_report(command, &e.0, "error");
            report["manifold"] = header;
            Outcome {
                report,
                exit_code: EXIT_INPUT,
            }
        }
    }
}

fn phi(manifest: &Manifest, h: &H1Data) -> Res<CohClass1> {
    let Some(v) = &manifest.phi else {
        return Err(ManifestError("this command needs `phi`".into()));
    };
    if v.len() != h.free_rank() {
        return Err(ManifestError(format!(
            "`phi` has {} entries but b1 = {}",
            v.len(),
            h.free_rank()
        )));
    }
    Ok(CohClass1::new(v.clone()))
}

fn euler(manifest: &Manifest, h: &H1Data) -> Res<Option<EulerClass>> {
    let Some(v) = &manifest.euler else {
        return Ok(None);
    };
    if v.len() != h.free_rank() {
        return Err(ManifestError(format!(
            "`euler` has {} entries but b1 = {}",
            v.len(),
            h.free_rank()
        )));
    }
    let t: Vec<BigInt> = match &manifest.euler_torsion {
        Some(t) => t.iter().map(|&x| BigInt::from(x)).collect(),
        None => vec![BigInt::from(0); h.torsion().len()],
    };
    EulerClass::new(h, v.clone(), t).map(Some).map_err(core)
}

fn required_euler(manifest: &Manifest, h: &H1Data) -> Res<EulerClass> {
    euler(manifest, h)?.ok_or_else(|| ManifestError("this command needs `euler`".into()))
}

fn quotients(manifest: &Manifest, p: &Presentation) -> Res<Vec<FiniteHom>> {
    let mut homs = vec![FiniteHom::trivial(p)];
    for g in manifest.groups()? {
        if g.order() > 1 {
            homs.extend(enumerate_epimorphisms(p, &g));
        }
    }
    Ok(homs)
}

fn execute(command: Command, manifest: &Manifest, m: &Manifold) -> Res<Computed> {
    let p = &m.presentation;
    let h = h1(p);
    match command {
        Command::H1 => Ok(computed(json!({
            "h1": report::h1(&h),
            "generator_images": h.generator_images(),
        }))),
        Command::Bundle => {
            let e = required_euler(manifest, &h)?;
            let inv = circle_bundle_invariants(&h, &e).map_err(core)?;
            let mut result = json!({ "invariants": report::bundle(&inv) });
            if !e.is_zero() && h.free_rank() > 0 {
                let ker: Vec<Vec<i64>> = ker_pairing(&h, &e).map_err(core)?.into_iter().map(|c| c.values).collect();
                result["ker_pairing"] = json!(ker);
                result["form_half"] = json!(intersection_form(&h, &e).map_err(core)?.half);
            }
            Ok(computed(result))
        }
        Command::Alex => {
            let d = alexander_multivariable(p).map_err(core)?;
            let mut result = json!({
                "multivariable": report::poly(&d),
                "symmetric": is_symmetric(&d),
            });
            if manifest.phi.is_some() {
                let f = phi(manifest, &h)?;
                let (one, method) = if h.free_rank() >= 2 {
                    (alexander_one_variable(p, &f).map_err(core)?, "multivariable")
                } else {
                    (alexander_one_variable_fox(p, &f).map_err(core)?, "fox")
                };
                result["one_variable"] = report::poly(&one);
                result["one_variable_method"] = json!(method);
            }
            Ok(computed(result))
        }
        Command::Talex => {
            let f = phi(manifest, &h)?;
            let homs = quotients(manifest, p)?;
            let mut indeterminate = false;
            let mut out = Vec::new();
            for a in &homs {
                let t = twisted_alexander(p, a, &f).map_err(core)?;
                indeterminate |= t.polynomial().is_none();
                let mut v = json!({ "quotient": report::hom(a) });
                if let (Some(o), Value::Object(t)) = (v.as_object_mut(), report::twisted(&t)) {
                    o.extend(t);
                }
                out.push(v);
            }
            let result = json!({ "quotients": out });
            Ok(if indeterminate {
                Computed {
                    status: "indeterminate",
                    exit_code: EXIT_INDETERMINATE,
                    result,
                }
            } else {
                computed(result)
            })
        }
        Command::Covers => {
            let f = manifest.phi.as_ref().map(|_| phi(manifest, &h)).transpose()?;
            let mut out = Vec::new();
            for a in quotients(manifest, p)?.iter().skip(1) {
                let cover = reidemeister_schreier(p, a).map_err(core)?;
                let ch = h1(&cover.presentation);
                let mut v = json!({
                    "quotient": report::hom(a),
                    "generators": cover.presentation.ngens(),
                    "relators": cover.presentation.nrels(),
                    "deficiency": cover.presentation.deficiency(),
                    "h1": report::h1(&ch),
                });
                if let Some(f) = &f {
                    let ic = induced_class(p, &cover, f).map_err(core)?;
                    v["div_phi_g"] = json!(ic.divisibility);
                    v["phi_g"] = json!(ic.class.values);
                }
                out.push(v);
            }
            Ok(computed(json!({ "covers": out })))
        }
        Command::Sw => {
            let d = alexander_multivariable(p).map_err(core)?;
            let s = sw_from_alexander(&d, &h).map_err(core)?;
            let mut result = json!({
                "alexander": report::poly(&d),
                "sw": report::sw(&s),
                "kzero_admissible": kzero_admissible(&s, &h),
                "coefficient_sum_vanishes": coefficient_sum_vanishes(h.free_rank()),
            });
            if let Some(e) = euler(manifest, &h)? {
                result["pushforward"] = report::sw(&baldridge_pushforward(&s, &e).map_err(core)?);
            }
            Ok(computed(result))
        }
        Command::SpliceSw => {
            let dk = match (&manifest.knot_polynomial, &m.knot) {
                (Some(c), _) => LaurentPoly::univariate("z", 0, c),
                (None, Some(k)) if m.source.starts_with("splice:") => k.alexander.with_vars(vars(&["z"])),
                _ => {
                    return Err(ManifestError(
                        "`splice-sw` needs a `splice` source or `knot_polynomial`".into(),
                    ))
                }
            };
            let e = required_euler(manifest, &h)?;
            let s = splice_sw(&dk, &e).map_err(core)?;
            Ok(computed(json!({
                "knot_polynomial": report::poly(&dk),
                "sw": report::sw(&s),
            })))
        }
        Command::Obstruct => {
            let f = phi(manifest, &h)?;
            let groups = manifest.groups()?;
            let records = degree_report(p, &f, &groups).map_err(core)?;
            let flags = Flags {
                graph_manifold: manifest.graph_manifold,
                k_zero: manifest.k_zero,
            };
            let v = verdict(&records, flags);
            let (status, exit_code) = match v.status {
                Status::Passes => ("PASSES", EXIT_COMPUTED),
                Status::Fails => ("FAILS", EXIT_FAILS),
                Status::Indeterminate => ("INDETERMINATE", EXIT_INDETERMINATE),
            };
            let group_names: Vec<&str> = groups.iter().map(|g| g.name()).collect();
            Ok(Computed {
                status,
                exit_code,
                result: json!({
                    "groups": group_names,
                    "records": records.iter().map(report::record).collect::<Vec<_>>(),
                    "verdict": report::verdict(&v),
                }),
            })
        }
        Command::Cone => {
            let (coords, a) = manifest.cone_input()?;
            if a.len() != h.free_rank() || coords.len() != h.free_rank() {
                return Err(ManifestError(format!(
                    "`cone` vectors must have b1 = {} entries",
                    h.free_rank()
                )));
            }
            let terms = decompose_positive(&RealClass2 { coords }, &a).map_err(core)?;
            Ok(computed(json!({
                "terms": terms.iter().map(report::positive_term).collect::<Vec<_>>(),
            })))
        }
    }
}
