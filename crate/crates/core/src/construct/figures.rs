//! Named diagrams shipped as Gauss-code files under `diagrams/`.

use crate::gauss::GaussDiagram;

pub const FOUR_CHORD_EXAMPLE_FILE: &str = include_str!("../../diagrams/four_chord_example.gauss");
pub const TREFOIL_FILE: &str = include_str!("../../diagrams/trefoil.gauss");
pub const K7_FILE: &str = include_str!("../../diagrams/k7.gauss");
pub const TWO_CHORD_FILE: &str = include_str!("../../diagrams/two_chord.gauss");

fn load(text: &str) -> GaussDiagram {
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    line.parse().expect("bundled diagram file")
}

/// Four chords with `V1 = -t^3-2t`, `V2 = -t`.
pub fn four_chord_example() -> GaussDiagram {
    load(FOUR_CHORD_EXAMPLE_FILE)
}

/// The long trefoil, all crossings positive.
pub fn long_trefoil() -> GaussDiagram {
    load(TREFOIL_FILE)
}

/// `K_7`: `V1 = -t`, `(α2, α3) = (-1, 0)`.
pub fn k7() -> GaussDiagram {
    load(K7_FILE)
}

/// Two positive linked chords of types 0 and 1, `V1 = 1`.
pub fn two_chord() -> GaussDiagram {
    load(TWO_CHORD_FILE)
}
