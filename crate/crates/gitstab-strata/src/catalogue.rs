//! The named boundary families of quintic threefolds.

use gitstab_core::{enumerate_monomials, invariant_span, SupportSet, WeightVector};

use crate::canonical::Catalogue;
use crate::error::StrataError;

/// The four first-level minimal-orbit families: the monomials of weight 0
/// for their invariant 1-PS.
pub const MINIMAL_ORBITS: [(&str, [i64; 5]); 4] = [
    ("MO-A", [3, 3, -2, -2, -2]),
    ("MO-B", [1, 0, 0, 0, -1]),
    ("MO-C", [4, 4, -1, -1, -6]),
    ("MO-D", [4, -1, -1, -1, -1]),
];

/// The ten second-level minimal-orbit families, as generic-form shorthand.
pub const SECOND_LEVEL: [(&str, &str); 10] = [
    ("MO2-I", "x0^2*x2*x4^2 + x0*x1*x2*x3*x4 + x1^2*x2*x3^2"),
    ("MO2-II", "x0^2*x3*x4^2 + x0*x1*x3^3 + x0*x1*x2*x3*x4 + x1^2*x2^2*x3"),
    (
        "MO2-III",
        "x0^2*(x2*x4^2 + x3^2*x4) + x0*x1*(x3^3 + x2*x3*x4) + x1^2*(x2*x3^2 + x2^2*x4)",
    ),
    ("MO2-IV", "x0*x4*x1*q2(x2,x3)"),
    ("MO2-V", "x0*x1*x2*x3*x4"),
    ("MO2-VI", "x1*x2^3*x3 + x1^2*x2*x3^2 + x0*x1*x2*x3*x4"),
    ("MO2-VII", "x4*x0^2*x3^2 + x4*x0*x1*x2*x3 + x4*x1^2*x2^2"),
    ("MO2-VIII", "x0*x1*q3(x2,x3,x4)"),
    ("MO2-IX", "x0*q{2,2}(x1,x2|x3,x4)"),
    ("MO2-X", "x0*(q4(x2,x3) + x1*q2(x2,x3)*x4 + x1^2*x4^2)"),
];

/// The weight-0 monomials of a first-level family's 1-PS.
pub fn minimal_orbit_support(h: &[i64]) -> Result<SupportSet, StrataError> {
    let h = WeightVector::new(h.to_vec())?;
    Ok(enumerate_monomials(5, 5)?.filter(|m| m.dot(h.weights()) == 0))
}

/// The invariant span of a second-level family.
pub fn second_level_support(expr: &str) -> Result<SupportSet, StrataError> {
    let s = SupportSet::parse(expr, 5)?;
    Ok(invariant_span(&s, &enumerate_monomials(5, 5)?)?)
}

/// The first-level families, in order.
pub fn quintic_seeds() -> Result<Vec<(String, SupportSet)>, StrataError> {
    MINIMAL_ORBITS
        .iter()
        .map(|(name, h)| Ok((name.to_string(), minimal_orbit_support(h)?)))
        .collect()
}

/// All fourteen named families. Second-level families are taken as their
/// invariant spans, so that every entry is a possible graph node.
pub fn quintic_catalogue() -> Result<Catalogue, StrataError> {
    let mut c = Catalogue::new();
    for (name, s) in quintic_seeds()? {
        c.insert(name, &s)?;
    }
    for (name, expr) in SECOND_LEVEL {
        c.insert(name, &second_level_support(expr)?)?;
    }
    Ok(c)
}
