//! Worked examples shipped with the library.

use crate::complex::LabeledComplex;
use crate::error::Result;
use crate::monomial::MonomialIdeal;
use crate::parse::parse_ideal;

/// A generic ideal in three variables with five outer corners.
pub const GENEX: &str = "x1^3, x1^2*x2, x1*x2^2*x3^2, x2^4, x2^3*x3, x3^3";

/// A non-generic ideal with two outer corners; the hull fixture resolves it.
pub const AMSTERDAM: &str = "x1^2, x1*x3, x2*x3, x2^2, x3^2";

/// [`AMSTERDAM`] with `x1` and `x3` exchanged.
pub const AMSTERDAM_SWAPPED: &str = "x1^2, x1*x2, x1*x3, x2^2, x3^2";

/// A non-generic ideal whose hull resolution is not minimal.
pub const MOTEX: &str = "x1^3, x1^2*x2^2, x1*x3, x2^3, x2*x3, x3^2";

pub const AMSTERDAM_HULL_JSON: &str = include_str!("../fixtures/amsterdam-hull.json");
pub const MOTEX_HULL_JSON: &str = include_str!("../fixtures/motex-hull.json");
pub const MOTEX_MINIMAL_JSON: &str = include_str!("../fixtures/motex-minimal.json");

pub fn genex() -> MonomialIdeal {
    parse_ideal(GENEX).expect("fixture parses")
}

pub fn amsterdam() -> MonomialIdeal {
    parse_ideal(AMSTERDAM).expect("fixture parses")
}

pub fn motex() -> MonomialIdeal {
    parse_ideal(MOTEX).expect("fixture parses")
}

pub fn amsterdam_hull() -> Result<LabeledComplex> {
    LabeledComplex::from_json(AMSTERDAM_HULL_JSON)
}

pub fn motex_hull() -> Result<LabeledComplex> {
    LabeledComplex::from_json(MOTEX_HULL_JSON)
}

pub fn motex_minimal() -> Result<LabeledComplex> {
    LabeledComplex::from_json(MOTEX_MINIMAL_JSON)
}
