pub mod tietze_moves;
