//! Transcriptions of the published quintic-threefold tables, kept as close
//! to the printed text as the expression grammar allows.
//!
//! Printed text is stored verbatim (LaTeX math with `\parallel` and
//! `\bigg` markup). Where the printed text cannot denote a quintic support
//! (wrong degree, stray operator, non-invariant monomial) a `normalized`
//! reading is given together with a note; consumers always report both.

use gitstab_core::{CoreError, SupportSet};

/// A printed destabilizing 1-PS.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Printed1Ps {
    /// An explicit weight vector.
    Weight([i64; 5]),
    /// A vector with unspecified entries, e.g. `a,b,1,-1,c`.
    Symbolic(&'static str),
    /// Printed as "No 1-PS".
    NoOnePs,
    /// Not printed (unstable lists).
    Absent,
}

/// One printed sub-family of a minimal-orbit family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrintedFamily {
    /// Printed label, e.g. `SS1-A` or `US3-II`.
    pub label: &'static str,
    /// The minimal-orbit family it belongs to.
    pub context: &'static str,
    /// The printed support.
    pub printed: &'static str,
    /// Reading used when the printed text is not a valid support.
    pub normalized: Option<&'static str>,
    /// Why the normalized reading differs.
    pub note: Option<&'static str>,
    /// The printed destabilizing 1-PS.
    pub destabilizer: Printed1Ps,
    /// The printed degeneration target (semistable families only).
    pub target: Option<&'static str>,
}

/// One row of the table of maximal non-stable families, with its flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NonstableRow {
    /// `SS1` … `SS7`.
    pub label: &'static str,
    /// Printed destabilizing 1-PS.
    pub destabilizer: [i64; 5],
    /// Printed maximal monomials.
    pub maximal_monomials: &'static [[u32; 5]],
    /// Printed support.
    pub printed: &'static str,
    /// Reading used when the printed text is not a valid support.
    pub normalized: Option<&'static str>,
    /// Why the normalized reading differs.
    pub note: Option<&'static str>,
    /// Printed degeneration target.
    pub degeneration: &'static str,
    /// Printed destabilizing flag.
    pub flag: &'static str,
}

/// One printed minimal-orbit family with its invariant 1-PS.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinimalOrbitRow {
    /// `MO-A` … `MO2-X`.
    pub label: &'static str,
    /// Printed invariant 1-PS `H` (not necessarily sum-zero).
    pub h: [i64; 5],
    /// Printed support.
    pub printed: &'static str,
}

/// Converts printed LaTeX math into the expression grammar of
/// [`SupportSet::parse`].
pub fn printed_to_expr(text: &str) -> String {
    text.replace("\\parallel", "||")
        .replace("\\bigg", "")
        .trim()
        .trim_end_matches('.')
        .trim()
        .to_string()
}

/// Parses printed text as a quintic support in five variables.
pub fn parse_printed(text: &str) -> Result<SupportSet, CoreError> {
    SupportSet::parse(&printed_to_expr(text), 5)
}

impl PrintedFamily {
    /// The support as printed, if it parses as a quintic support.
    pub fn printed_support(&self) -> Result<SupportSet, CoreError> {
        parse_printed(self.printed)
    }

    /// The support used for verification: the normalized reading if there
    /// is one, the printed text otherwise.
    pub fn support(&self) -> Result<SupportSet, CoreError> {
        parse_printed(self.normalized.unwrap_or(self.printed))
    }

    /// The explicit printed weight, if any.
    pub fn weight(&self) -> Option<[i64; 5]> {
        match self.destabilizer {
            Printed1Ps::Weight(w) => Some(w),
            _ => None,
        }
    }
}

impl NonstableRow {
    /// The support used for verification.
    pub fn support(&self) -> Result<SupportSet, CoreError> {
        parse_printed(self.normalized.unwrap_or(self.printed))
    }
}

/// The printed topmost non-stable monomials.
pub const TOPMOST: [[u32; 5]; 4] = [[3, 0, 0, 2, 0], [4, 0, 0, 0, 1], [2, 0, 3, 0, 0], [1, 4, 0, 0, 0]];

/// The maximal non-stable families and their flags.
pub const NONSTABLE: [NonstableRow; 7] = [
    NonstableRow {
        label: "SS1",
        destabilizer: [2, 2, 2, -3, -3],
        maximal_monomials: &[[3, 0, 0, 2, 0]],
        printed: r"q_{3,2}(x_0,x_1,x_2 \parallel x_3,x_4) + q_{2.3}(x_0,x_1,x_2 \parallel x_3,x_4)+q_{1,4}(x_0,x_1,x_2 \parallel x_3,x_4)+q_5(x_3,x_4)",
        normalized: Some(r"q_{3,2}(x_0,x_1,x_2 \parallel x_3,x_4) + q_{2,3}(x_0,x_1,x_2 \parallel x_3,x_4)+q_{1,4}(x_0,x_1,x_2 \parallel x_3,x_4)+q_5(x_3,x_4)"),
        note: Some("q_{2.3} read as q_{2,3}"),
        degeneration: "MO-A",
        flag: r"\emptyset \subseteq (x_3=x_4=0)  \subseteq \mathbb{P}^4",
    },
    NonstableRow {
        label: "SS2",
        destabilizer: [1, 1, 1, 1, -4],
        maximal_monomials: &[[4, 0, 0, 0, 1]],
        printed: r"x_4q_4(x_0,x_1,x_2,x_3,x_4)",
        normalized: None,
        note: None,
        degeneration: "MO-D",
        flag: r"\emptyset \subseteq (x_4=0)  \subseteq \mathbb{P}^4",
    },
    NonstableRow {
        label: "SS3",
        destabilizer: [3, 3, -2, -2, -2],
        maximal_monomials: &[[2, 0, 3, 0, 0]],
        printed: r"q_{2,3}(x_0,x_1 \parallel x_2,x_3,x_4)+q_{1,4}(x_0,x_1  \parallel x_2,x_3,x_4)+q_5(x_2,x_3,x_4)",
        normalized: None,
        note: None,
        degeneration: "MO-A",
        flag: r"\emptyset \subseteq (x_2=x_3=x_4=0)  \subseteq \mathbb{P}^4",
    },
    NonstableRow {
        label: "SS4",
        destabilizer: [4, -1, -1, -1, -1],
        maximal_monomials: &[[1, 4, 0, 0, 0]],
        printed: r"x_0q_4(x_1,x_2,x_3,x_4)+q_5(x_1,x_2,x_3,x_4)",
        normalized: None,
        note: None,
        degeneration: "MO-D",
        flag: r"\emptyset \subseteq (x_1=x_2=x_3=x_4=0)  \subseteq \mathbb{P}^4",
    },
    NonstableRow {
        label: "SS5",
        destabilizer: [1, 0, 0, 0, -1],
        maximal_monomials: &[[0, 5, 0, 0, 0], [1, 3, 0, 0, 1], [2, 1, 0, 0, 2]],
        printed: r"x_0^2 ( x_4^2q_1(x_1,x_2,x_3,x_4) ) + x_0x_4q_3(x_1,x_2,x_3,x_4) + q_5(x_1,x_2,x_3,x_4)",
        normalized: None,
        note: None,
        degeneration: "MO-B",
        flag: r"\emptyset \subseteq (x_1=x_2=x_3=x_4=0) \subseteq (x_4=0)  \subseteq \mathbb{P}^4",
    },
    NonstableRow {
        label: "SS6",
        destabilizer: [4, 4, -1, -1, -6],
        maximal_monomials: &[[1, 0, 4, 0, 0], [3, 0, 0, 0, 2], [2, 0, 2, 0, 1]],
        printed: r"x_4^2q_{3} (x_0,x_1)   +   x_4 q_{2,2}(x_0,x_1 \parallel x_2,x_3,x_4)  + q_{1,4}(x_0,x_1 \parallel x_2,x_3,x_4) + q_5(x_2,x_3,x_4)",
        normalized: None,
        note: None,
        degeneration: "MO-C",
        flag: r"\emptyset \subseteq (x_2=x_3=x_4=0) \subseteq (x_4=0)  \subseteq \mathbb{P}^4",
    },
    NonstableRow {
        label: "SS7",
        destabilizer: [6, 1, 1, -4, -4],
        maximal_monomials: &[[0, 4, 0, 1, 0], [1, 2, 0, 2, 0], [2, 0, 0, 3, 0]],
        printed: r"x^{2}_0q_3(x_3,x_4) +x_0  ( q_{2,2}(x_1,x_2 \parallel x_3,x_4)+q_{1,3}(x_1,x_2 \parallel x_3,x_4)+q_4(x_3,x_4) )  +  q_{4,1}(x_1,x_2 \parallel x_3,x_4)+q_{3,2}(x_1,x_2 \parallel x_3,x_4) +q_{2,3}(x_1,x_2 \parallel x_3,x_4)+q_{1,4}(x_1,x_2 \parallel x_3,x_4)+q_5(x_3,x_4).",
        normalized: Some(r"x_0^2q_3(x_3,x_4) +x_0  ( q_{2,2}(x_1,x_2 \parallel x_3,x_4)+q_{1,3}(x_1,x_2 \parallel x_3,x_4)+q_4(x_3,x_4) )  +  q_{4,1}(x_1,x_2 \parallel x_3,x_4)+q_{3,2}(x_1,x_2 \parallel x_3,x_4) +q_{2,3}(x_1,x_2 \parallel x_3,x_4)+q_{1,4}(x_1,x_2 \parallel x_3,x_4)+q_5(x_3,x_4)"),
        note: Some("x^{2}_0 written as x_0^2"),
        degeneration: "MO-C",
        flag: r"\emptyset \subseteq (x_1=x_2=x_3=x_4=0) \subseteq (x_3=x_4=0)  \subseteq \mathbb{P}^4 .",
    },
];

/// The first-level minimal-orbit equations and invariant 1-PS.
pub const MINIMAL_ORBITS: [MinimalOrbitRow; 4] = [
    MinimalOrbitRow { label: "MO-A", h: [3, 3, -2, -2, -2], printed: r"q_{2,3}(x_0,x_1 \parallel x_2 , x_3, x_4)" },
    MinimalOrbitRow { label: "MO-B", h: [1, 0, 0, 0, -1], printed: r"q_5(x_1,x_2,x_3)+x_0x_4q_3(x_1,x_2,x_3)+x_0^2x_4^2q_1(x_1,x_2,x_3)" },
    MinimalOrbitRow { label: "MO-C", h: [4, 4, -1, -1, -6], printed: r"q_{1,4}(x_0,x_1 \parallel x_2,x_3) + x_4q_{2,2}(x_0,x_1 \parallel x_2,x_3) + x_4^2q_3(x_0,x_1)" },
    MinimalOrbitRow { label: "MO-D", h: [4, -1, -1, -1, -1], printed: r"x_0q_4(x_1,x_2,x_3,x_4)" },
];

/// The second-level minimal-orbit families and their printed 1-PS.
pub const SECOND_LEVEL: [MinimalOrbitRow; 10] = [
    MinimalOrbitRow { label: "MO2-I", h: [6, 0, 2, -3, -5], printed: r"x_0^2 ( x_2x_4^2   ) + x_0x_1 (  x_2x_3x_4        ) + x_1^2 ( x_2x_3^2   )" },
    MinimalOrbitRow { label: "MO2-II", h: [4, 2, -1, -2, -3], printed: r"x_0^2 ( x_3x_4^2  ) + x_0x_1 (  x_3^3 + x_2x_3x_4 ) + x_1^2 ( x_2^2x_3  )" },
    MinimalOrbitRow { label: "MO2-III", h: [4, 2, 0, -2, -4], printed: r"x_0^2 ( x_2x_4^2 + x_3^2x_4  ) + x_0x_1 (  x_3^3 + x_2x_3x_4 ) + x_1^2 ( x_2x_3^2 + x_2^2x_4   )" },
    MinimalOrbitRow { label: "MO2-IV", h: [4, 2, -1, -1, -5], printed: r"x_0x_4 ( x_1q_2(x_2,x_3) )" },
    MinimalOrbitRow { label: "MO2-V", h: [5, 3, -1, -2, -7], printed: r"x_0x_4 ( x_1x_2x_3 )" },
    MinimalOrbitRow { label: "MO2-VI", h: [2, 1, 0, -1, -2], printed: r"(   x_1x_2^3x_3 + x_1^2x_2x_3^2  )  + x_0x_4 (    x_1x_2x_3      )" },
    MinimalOrbitRow { label: "MO2-VII", h: [5, 3, 0, -2, -6], printed: r"x_4x_0^2x_3^2 + x_4x_0x_1x_2x_3 + x_4x_1^2x_2^2" },
    MinimalOrbitRow { label: "MO2-VIII", h: [4, 2, -2, -2, -2], printed: r"x_0x_1q_3(x_2,x_3,x_4)" },
    MinimalOrbitRow { label: "MO2-IX", h: [4, 0, 0, -2, -2], printed: r"x_0q_{2,2}(x_1,x_2 \parallel x_3,x_4)" },
    MinimalOrbitRow { label: "MO2-X", h: [4, 0, -1, -1, -2], printed: r"x_0 ( q_4(x_2,x_3) + x_1q_2(x_2,x_3)x_4 + x_1^2x_4^2 )" },
];

/// The arrows of the published stratification figure. The figure draws
/// `MO2-V` twice; both copies denote the same node.
pub const FIGURE_EDGES: [(&str, &str); 20] = [
    ("MO-A", "MO2-I"),
    ("MO-A", "MO2-IV"),
    ("MO-A", "MO2-II"),
    ("MO-A", "MO2-III"),
    ("MO-B", "MO2-IV"),
    ("MO-B", "MO2-V"),
    ("MO-B", "MO2-VI"),
    ("MO-C", "MO2-VII"),
    ("MO-D", "MO2-VIII"),
    ("MO-D", "MO2-IX"),
    ("MO-D", "MO2-X"),
    ("MO2-I", "MO2-V"),
    ("MO2-II", "MO2-V"),
    ("MO2-III", "MO2-V"),
    ("MO2-IV", "MO2-V"),
    ("MO2-V", "MO2-V"),
    ("MO2-VI", "MO2-V"),
    ("MO2-VII", "MO2-V"),
    ("MO2-VIII", "MO2-V"),
    ("MO2-X", "MO2-V"),
];

/// Looks up a printed sub-family (semistable or unstable) by label.
pub fn printed_family(label: &str) -> Option<&'static PrintedFamily> {
    SUBFAMILIES.iter().chain(UNSTABLE.iter()).find(|f| f.label == label)
}

/// Looks up a minimal-orbit row by label.
pub fn minimal_orbit(label: &str) -> Option<&'static MinimalOrbitRow> {
    MINIMAL_ORBITS.iter().chain(SECOND_LEVEL.iter()).find(|r| r.label == label)
}

pub const SUBFAMILIES: [PrintedFamily; 53] = [
    PrintedFamily {
        label: "SS1-A",
        context: "MO-A",
        printed: r"x_0^2( q_3(x_3,x_4)+q_1(x_2,x_3)x_4^2+x_4^3) + x_0x_1 ( q_3(x_3,x_4) + x_2x_3x_4 + q_1(x_2,x_3)x_4^2+x_3x_4^2+x_3^2x_4+x_4^3 ) + x_1^2 ( x_2q_2(x_3,x_4) + q_3(x_3,x_4) )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, -1, 4, -1, -3]),
        target: Some("MO2-I"),
    },
    PrintedFamily {
        label: "SS2-A",
        context: "MO-A",
        printed: r"x_0^2 ( q_3(x_3,x_4) ) + x_0x_1 ( x_2q_2(x_3,x_4) + q_3(x_3,x_4) ) + x_1^2 ( x_2q_2(x_3,x_4) + q_3(x_3,x_4) )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, -1, 2, -1, -1]),
        target: Some("MO2-IV"),
    },
    PrintedFamily {
        label: "SS3-A",
        context: "MO-A",
        printed: r"x_0^2 ( q_1(x_2,x_3)x_4^2+x_4^3 ) + x_0x_1 ( q_2(x_2,x_3)x_4 + q_1(x_2,x_3)x_4^2+ x_4^3 ) + x_1^2 ( q_2(x_2,x_3)x_4 + q_1(x_2,x_3)x_4^2+ x_4^3 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, -1, 1, 1, -2]),
        target: Some("MO2-IV"),
    },
    PrintedFamily {
        label: "SS4-A",
        context: "MO-A",
        printed: r"x_0^2 ( x_3x_4^2+x_4^3 ) + x_0x_1 ( q_3(x_3,x_4) + x_2x_3x_4 + q_1(x_2,x_3)x_4^2+x_3x_4^2+x_3^2x_4+x_4^3 ) + x_1^2 ( x_2^2q_1(x_3,x_4) + x_2q_2(x_3,x_4) + q_3(x_3,x_4) )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, -1, 1, 0, -1]),
        target: Some("MO2-I"),
    },
    PrintedFamily {
        label: "SS5-A",
        context: "MO-A",
        printed: r"x_0^2 ( q_1(x_2,x_3)x_4^2+x_3^2x_4+x_4^3 ) + x_0x_1 ( q_3(x_3,x_4) + x_2x_3x_4 + q_1(x_2,x_3)x_4^2+x_3x_4^2+x_3^2x_4+x_4^3 ) + x_1^2 (  x_2q_2(x_3,x_4) + q_3(x_3,x_4) + q_2(x_2,x_3)x_4 + x_4^3  )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, -1, 2, 0, -2]),
        target: Some("MO2-IV"),
    },
    PrintedFamily {
        label: "SS1-B",
        context: "MO-B",
        printed: r"( x_1q_4(x_2,x_3) + q_5(x_2,x_3) ) + x_0x_4 (  x_1q_2(x_2,x_3) + q_3(x_2,x_3)  ) + x_0^2x_4^2 (  q_1(x_2,x_3) )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, 2, -1, -1, -1]),
        target: Some("MO2-IV"),
    },
    PrintedFamily {
        label: "SS2-B",
        context: "MO-B",
        printed: r"( x_1q_4(x_2,x_3) + q_5(x_2,x_3) + q_2(x_1,x_2)x_3^2 ) + x_0x_4 ( q_3(x_2,x_3) + x_1x_2x_3 + q_1(x_1,x_2)x_3^2  ) + x_0^2x_4^2 (  q_1(x_2,x_3) )",
        normalized: Some(r"( x_1q_4(x_2,x_3) + q_5(x_2,x_3) + q_2(x_1,x_2)x_3^3 ) + x_0x_4 ( q_3(x_2,x_3) + x_1x_2x_3 + q_1(x_1,x_2)x_3^2  ) + x_0^2x_4^2 (  q_1(x_2,x_3) )"),
        note: Some("degree-4 summand q_2(x_1,x_2)x_3^2 read as q_2(x_1,x_2)x_3^3"),
        destabilizer: Printed1Ps::Weight([1, 3, -1, -2, -1]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS3-B",
        context: "MO-B",
        printed: r"( q_3(x_1,x_2)x_3^2 + q_2(x_1,x_2)x_3^3 + q_1(x_1,x_2)x_3^4 + x_3^5 ) + x_0x_4 (  q_2(x_1,x_2)x_3 + q_1(x_1,x_2)x_3^2 + x_3^3  ) + x_0^2x_4^2 (  x_3  )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, 1, 1, -2, -1]),
        target: Some("MO2-IV"),
    },
    PrintedFamily {
        label: "SS4-B",
        context: "MO-B",
        printed: r"( q_5(x_2,x_3) + x_1x_2^3x_3 + x_1x_2^2x_3^2 + x_1x_2x_3^3 + x_1x_3^4 + x_1^2x_2x_3^2 + q_2(x_1,x_2)x_3^3  ) + x_0x_4 ( q_3(x_2,x_3) + x_1x_2x_3 + q_1(x_1,x_2)x_3^2  ) + x_0^2x_4^2 (  q_1(x_2,x_3)  )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, 1, 0, -1, -1]),
        target: Some("MO2-VI"),
    },
    PrintedFamily {
        label: "SS1-C",
        context: "MO-C",
        printed: r"( x_0(x_2x_3^3 + x_3^4) + x_1( x_2^2x_3^2+x_2x_3^3 + x_3^4)  ) + x_4^2 ( x_0x_1^2 + x_1^3 ) + x_4 ( x_0^2 (x_3^2) + x_0x_1 ( x_2x_3 + x_3^2)  + x_1^2(x_2^2+x_2x_3 + x_3^2) )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, -1, 1, -1, 0]),
        target: Some("MO2-VII"),
    },
    PrintedFamily {
        label: "SS1-D",
        context: "MO-D",
        printed: r"x_0 (  x_1q_3(x_2,x_3,x_4) + q_4(x_2,x_3,x_4)   )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([0, 3, -1, -1, -1]),
        target: Some("MO2-VII"),
    },
    PrintedFamily {
        label: "SS2-D",
        context: "MO-D",
        printed: r"x_0 (  q_3(x_1,x_2,x_3)x_4 + q_2(x_1,x_2,x_3)x_4^2 + q_1(x_1,x_2,x_3)x_4^3 + x_4^4   )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([0, 1, 1, 1, -3]),
        target: Some("MO2-VIII"),
    },
    PrintedFamily {
        label: "SS3-D",
        context: "MO-D",
        printed: r"x_0 (  q_{2,2}(x_1,x_2 \parallel x_3,x_4) + q_{1,3}(x_1,x_2 \parallel x_3,x_4) + q_4(x_3,x_4)   )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([0, 1, 1, -1, -1]),
        target: Some("MO2-IX"),
    },
    PrintedFamily {
        label: "SS4-D",
        context: "MO-D",
        printed: r"x_0 (  q_4(x_2,x_3,x_4) +   x_1q_2(x_2,x_3)x_4 + q_2(x_1,x_2,x_3)x_4^2 + q_1(x_1,x_2,x_3)x_4^3   )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([0, 1, 0, 0, -1]),
        target: Some("MO2-X"),
    },
    PrintedFamily {
        label: "SS1-I",
        context: "MO2-I",
        printed: r"x_0^2 ( x_2x_4^2   ) + x_0x_1 (  x_2x_3x_4 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, 1, -1, 0, -1]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS2-I",
        context: "MO2-I",
        printed: r"x_0x_1 (  x_2x_3x_4        ) + x_1^2 ( x_2x_3^2   )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, -1, 0, 0, 0]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS1-II",
        context: "MO2-II",
        printed: r"x_0^2 ( x_3x_4^2  ) + x_0x_1 (  x_3^3 + x_2x_3x_4 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, 1, 0, -1, -1]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS2-II",
        context: "MO2-II",
        printed: r"x_0x_1 (  x_3^3 + x_2x_3x_4 ) + x_1^2 ( x_2^2x_3  )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, 0, 0, -1, 0]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS3-II",
        context: "MO2-II",
        printed: r"x_0x_1 (  x_2x_3x_4 ) + x_1^2 ( x_2^2x_3  )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, -1, 0, 0, 0]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS4-II",
        context: "MO2-II",
        printed: r"x_0^2 ( x_3x_4^2  ) + x_0x_1 (   x_2x_3x_4 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, 1, 0, -1, -1]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS5-II",
        context: "MO2-II",
        printed: r"x_0x_1 (  x_3^3 + x_2x_3x_4 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, -2, 0, 0, 1]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS6-II",
        context: "MO2-II",
        printed: r"x_0x_1 ( x_2x_3x_4 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::NoOnePs,
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS1-III",
        context: "MO2-III",
        printed: r"x_0^2 ( x_2x_4^2 + x_3^2x_4  ) + x_0x_1 (  x_3^3 + x_2x_3x_4 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, 3, 3, -4, -3]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS2-III",
        context: "MO2-III",
        printed: r"x_0x_1 (  x_3^3 + x_2x_3x_4 ) + x_1^2 ( x_2x_3^2 + x_2^2x_4 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, -8, 1, 2, 4]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS3-III",
        context: "MO2-III",
        printed: r"x_0^2 ( x_2x_4^2 + x_3^2x_4 ) + x_0x_1 (  x_2x_3x_4 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, 2, 0, 0, -3]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS4-III",
        context: "MO2-III",
        printed: r"x_0x_1 (   x_2x_3x_4 ) + x_1^2 ( x_2x_3^2 + x_2^2x_4 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, -1, 0, 0, 0]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS5-III",
        context: "MO2-III",
        printed: r"x_0^2 (  x_3^2x_4 ) + x_0x_1 (  x_3^3 + x_2x_3x_4 ) + x_1^2 ( x_2x_3^2 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, 1, 2, -7, 3]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS6-III",
        context: "MO2-III",
        printed: r"x_0^2 (  x_3^2x_4  ) + x_0x_1 ( x_2x_3x_4 ) + x_1^2 ( x_2x_3^2 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, 0, 0, -2, 1]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS7-III",
        context: "MO2-III",
        printed: r"x_0^2 ( x_2x_4^2 ) + x_0x_1 ( x_2x_3x_4 ) + x_1^2 ( x_2^2x_4 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, 0, -1, 1, -1]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS8-III",
        context: "MO2-III",
        printed: r"x_0^2 ( x_2x_4^2 ) + x_0x_1 (  x_3^3 + x_2x_3x_4 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, 1, 1, -1, -2]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS9-III",
        context: "MO2-III",
        printed: r"x_0^2 ( x_3^2x_4 ) + x_0x_1 ( x_3^3 + x_2x_3x_4 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, 0, 0, -2, 1]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS10-III",
        context: "MO2-III",
        printed: r"x_0x_1 ( x_3^3 + x_2x_3x_4 ) + x_1^2 (  x_2^2x_4 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, -2, 0, 0, 1]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS11-III",
        context: "MO2-III",
        printed: r"x_0x_1 ( x_3^3 + x_2x_3x_4 ) + x_1^2 ( x_2x_3^2 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, -2, 0, 0, 1]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS12-III",
        context: "MO2-III",
        printed: r"x_0x_1 ( x_2x_3x_4 ) + x_1^2 ( x_2^2x_4 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, 0, 0, 0, -1]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS13-III",
        context: "MO2-III",
        printed: r"x_0x_1 (  x_2x_3x_4 ) + x_1^2 ( x_2x_3^2 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, -1, 0, 0, 0]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS14-III",
        context: "MO2-III",
        printed: r"x_0^2 ( x_2x_4^2 ) + x_0x_1 ( x_2x_3x_4 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, 1, -1, 0, -1]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS15-III",
        context: "MO2-III",
        printed: r"x_0^2 (  x_3^2x_4 ) + x_0x_1 (  x_2x_3x_4 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, 2, 0, 0, -3]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS16-III",
        context: "MO2-III",
        printed: r"x_0x_1 (x_3^3 + x_2x_3x_4 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, -2, 0, 0, 1]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS17-III",
        context: "MO2-III",
        printed: r"x_0x_1 (   x_2x_3x_4 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::NoOnePs,
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS1-IV",
        context: "MO2-IV",
        printed: r"x_0x_4 ( x_1x_2x_3 + x_1x_3^2 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, 0, 1, 0, -2]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS1-V",
        context: "MO2-V",
        printed: r"x_0x_4 x_2x_3x_1",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::NoOnePs,
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS1-VI",
        context: "MO2-VI",
        printed: r"(   x_1x_2^3x_3 + x_1^2x_2x_3^2 )  + x_0x_4 ( x_1x_2x_3 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, 0, -1, 0, 0]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS2-VI",
        context: "MO2-VI",
        printed: r"( x_1x_2^3x_3 )  + x_0x_4 ( x_1x_2x_3 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, 0, -1, 0, 0]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS3-VI",
        context: "MO2-VI",
        printed: r"(  x_1^2x_2x_3^2 )  + x_0x_4 ( x_1x_2x_3 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, 0, -1, 0, 0]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS4-VI",
        context: "MO2-VI",
        printed: r"x_0x_4 (    x_1x_2x_3 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::NoOnePs,
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS1-VII",
        context: "MO2-VII",
        printed: r"x_4x_0^2x_3^2 + x_4x_0x_1x_2x_3",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, 2, 0, 0, 0]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS2-VII",
        context: "MO2-VII",
        printed: r"x_4x_0x_1x_2x_3 + x_4x_1^2x_2^2",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, 0, 0, 0, -1]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS3-VII",
        context: "MO2-VII",
        printed: r"x_4x_0x_1x_2x_3",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::NoOnePs,
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS1-VIII",
        context: "MO2-VIII",
        printed: r"x_0x_1( x_2q_2(x_3,x_4) + q_3(x_3,x_4))",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, -1, 2, -1, -1]),
        target: Some("MO2-IV"),
    },
    PrintedFamily {
        label: "SS2-VIII",
        context: "MO2-VIII",
        printed: r"x_0x_1( q_2(x_2,x_3)x_4 + q_1(x_2,x_3)x_4^2 + x_4^3 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Weight([1, -1, 1, 1, -2]),
        target: Some("MO2-IV"),
    },
    PrintedFamily {
        label: "SS1-IX",
        context: "MO2-IX",
        printed: r"x_0 ( x_1x_2 + x_2^2 \parallel x_3x_4 + x_4^2 )",
        normalized: Some(r"x_0 ( x_1x_2 + x_2^2 ) ( x_3x_4 + x_4^2 )"),
        note: Some(r#""a \parallel b" read as the product of the two factors"#),
        destabilizer: Printed1Ps::Weight([0, 1, -1, 1, -1]),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS1-X",
        context: "MO2-X",
        printed: r"x_0 ( q_4(x_2,x_3) + x_1 (  x_2x_3 + x_3^2  ) x_4 + x_1^2x_4^2 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Symbolic(r"a,b,1,-1,c"),
        target: Some("MO2-V"),
    },
    PrintedFamily {
        label: "SS2-X",
        context: "MO2-X",
        printed: r"x_0 ( q_4(x_2,x_3) + x_1 (x_2x_3 + x_2^2  ) x_4 + x_1^2x_4^2 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Symbolic(r"a,b,1,-1,c"),
        target: Some("MO2-V"),
    },
];

pub const UNSTABLE: [PrintedFamily; 62] = [
    PrintedFamily {
        label: "US1-A",
        context: "MO-A",
        printed: r"x_0^2(q_3(x_3,x_4)+x_2x_4^2) + x_0x_1(q_3(x_3,x_4)+x_2x_4^2) + x_1^2(q_3(x_3,x_4)+x_2x_3x_4+x_2x_4^2)",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US2-A",
        context: "MO-A",
        printed: r"x_0^2(q_3(x_3,x_4)) + x_0x_1(q_3(x_3,x_4)) + x_1^2(q_3(x_3,x_4)+x_2q_2(x_3,x_4))",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US3-A",
        context: "MO-A",
        printed: r"x_0^2(x_2x_4^2+x_3^2x_4+x_3x_4^2+x_4^3) + x_0x_1(x_2x_4^2+x_3^2x_4+x_3x_4^2+x_4^3) + x_1^2(q_3(x_3,x_4)+x_2x_3x_4+x_2x_4^2)",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US4-A",
        context: "MO-A",
        printed: r"x_0^2(x_2x_4^2+x_3x_4^2+x_4^3) + x_0x_1(x_2x_4^2+x_3^2x_4+x_3x_4^2+x_4^3) + x_1^2(q_2(x_2,x_3)x_4+q_1(x_2,x_3)x_4^2+x_4^3)",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US5-A",
        context: "MO-A",
        printed: r"x_0^2(x_4^3) + x_0x_1(q_1(x_2,x_3)x_4^2+x_3^2x_4+x_4^3) + x_1^2(q_3(x_3,x_4)+x_2^2x_4+x_2x_3x_4+x_2x_4^2)",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US6-A",
        context: "MO-A",
        printed: r"x_0^2(x_3x_4^2+x_4^3) + x_0x_1(q_1(x_2,x_3)x_4^2+x_3^2x_4+x_4^3) + x_1^2(q_3(x_3,x_4)+x_2x_3x_4+x_2x_4^2)",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US7-A",
        context: "MO-A",
        printed: r"x_0^2(x_3x_4^2+x_4^3) + x_0x_1(q_1(x_2,x_3)x_4^2+x_3^2x_4+x_4^3) + x_1^2(q_2(x_2,x_3)x_4+q_1(x_2,x_3)x_4^2+x_4^3)",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US8-A",
        context: "MO-A",
        printed: r"x_0^2(x_3^2x_4+x_3x_4^2+x_4^3) + x_0x_1(q_1(x_2,x_3)x_4^2+x_3^2x_4+x_4^3) + x_1^2(x_2q_2(x_3,x_4)+q_3(x_3,x_4))",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US9-A",
        context: "MO-A",
        printed: r"x_0^2(x_3x_4^2+x_4^3) + x_0x_1(q_1(x_2,x_3)x_4^2+x_3^2x_4+x_4^3) + x_1^2(x_2q_2(x_3,x_4)+q_3(x_3,x_4))",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US10-A",
        context: "MO-A",
        printed: r"x_0^2(x_4^3) + x_0x_1(q_1(x_2,x_3)x_4^2+x_3^2x_4+x_4^3) + x_1^2(x_2q_2(x_3,x_4)+q_3(x_3,x_4))",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US11-A",
        context: "MO-A",
        printed: r"x_0^2(x_3x_4^2+x_4^3) + x_0x_1(q_1(x_2,x_3)x_4^2+x_3^2x_4+x_4^3) + x_1^2(x_2x_3x_4+x_2x_4^2+q_3(x_3,x_4))",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US12-A",
        context: "MO-A",
        printed: r"x_0^2(x_3x_4^2+x_4^3) + x_0x_1(q_1(x_2,x_3)x_4^2+x_3^2x_4+x_4^3) + x_1^2(q_2(x_2,x_3)x_4+q_1(x_2,x_3)x_4^2+x_4^3)",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US13-A",
        context: "MO-A",
        printed: r"x_0^2(x_4^3) + x_0x_1(q_1(x_2,x_3)x_4^2+x_3^2x_4+x_4^3) + x_1^2(q_2(x_2,x_3)x_4+q_1(x_2,x_3)x_4^2+x_4^3+x_3^3)",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US14-A",
        context: "MO-A",
        printed: r"x_0^2(x_4^3+x_3^2x_4) + x_0x_1(x_4^3+x_3^2x_4) + x_1^2(x_2q_2(x_3,x_4)+q_3(x_3,x_4))",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US15-A",
        context: "MO-A",
        printed: r"x_0^2(x_4^3) + x_0x_1(x_4^3+x_3^2x_4) + x_1^2(x_2q_2(x_3,x_4)+q_3(x_3,x_4)+x_2^3x_4)",
        normalized: Some(r"x_0^2(x_4^3) + x_0x_1(x_4^3+x_3^2x_4) + x_1^2(x_2q_2(x_3,x_4)+q_3(x_3,x_4)+x_2^2x_4)"),
        note: Some("degree-6 monomial x_1^2x_2^3x_4 read as x_1^2x_2^2x_4"),
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US16-A",
        context: "MO-A",
        printed: r"x_0^2(x_3^2x_4+x_4^3) + x_0x_1(x_4^3+x_3^2x_4) + x_1^2(q_3(x_3,x_4)+x_2x_3x_4+x_2x_4^2)",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US17-A",
        context: "MO-A",
        printed: r"x_0^2(x_3^2x_4+x_4^3) + x_0x_1(x_4^3+x_3^2x_4) + x_1^2(q_2(x_2,x_3)x_4+q_1(x_2,x_3)x_4+x_4^3)",
        normalized: Some(r"x_0^2(x_3^2x_4+x_4^3) + x_0x_1(x_4^3+x_3^2x_4) + x_1^2(q_2(x_2,x_3)x_4+q_1(x_2,x_3)x_4^2+x_4^3)"),
        note: Some(r"the summand x_1^2 q_1(x_2,x_3) x_4 has degree 4; read as x_1^2 q_1(x_2,x_3) x_4^2"),
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US18-A",
        context: "MO-A",
        printed: r"x_0^2(x_4^3) + x_0x_1(x_4^3+x_3^2x_4) + x_1^2(q_3(x_3,x_4)+x_2x_3x_4+x_2x_4^2+x_3^3)",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US1-B",
        context: "MO-B",
        printed: r"(x_1q_4(x_2,x_3)+x_1^2x_3)+x_0x_4(q_3(x_2,x_3)+x_1x_3^2)+x_0^2x_4^2(x_2+x_3)",
        normalized: Some(r"(x_1q_4(x_2,x_3)+x_1^2x_3^3)+x_0x_4(q_3(x_2,x_3)+x_1x_3^2)+x_0^2x_4^2(x_2+x_3)"),
        note: Some("degree-3 summand x_1^2x_3 read as x_1^2x_3^3"),
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US2-B",
        context: "MO-B",
        printed: r"(q_5(x_2,x_3)+x_1x_2^3x_3+x_1x_2^2x_3^2+x_1^2x_3^3+x_1x_2x_3^3+x_1x_3^4)+x_0x_4(q_1(x_1,x_2)x_3^2+x_2^2x_3+x_3^3)+x_0^2x_4^2(x_3)",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US3-B",
        context: "MO-B",
        printed: r"(x_1^2x_2x_3^2+x_1x_2^2x_3^2+x_2^4x_3+x_2^3x_3^2+x_2^2x_3^3+q_2(x_1,x_2)x_3^3+q_1(x_1,x_2)x_3^4+x_3^5)+x_0x_4(q_1(x_1,x_2)x_3^2+x_2^2x_3+x_3^3)+x_0^2x_4^2(x_3)",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US4-B",
        context: "MO-B",
        printed: r"(q_3(x_1,x_2)x_3^2+q_2(x_1,x_2)x_3^3+q_1(x_1,x_2)x_3^4+x_4^5)+x_0x_4(q_1(x_1,x_2)x_3^2+x_2^2x_3+x_3^3)+x_0^2x_4^2(x_3)",
        normalized: Some(r"(q_3(x_1,x_2)x_3^2+q_2(x_1,x_2)x_3^3+q_1(x_1,x_2)x_3^4+x_3^5)+x_0x_4(q_1(x_1,x_2)x_3^2+x_2^2x_3+x_3^3)+x_0^2x_4^2(x_3)"),
        note: Some(r"x_4^5 is not invariant (H-weight -5); flagged, certified with the reading x_3^5"),
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US1-C",
        context: "MO-C",
        printed: r"x_0(x_2x_3^3+x_3^4)+x_1(x_2^2x_3^2+x_2x_3^3+x_3^3)+x_4^2(x_0x_1^2+x_1^3)+x_4x_0x_1(x_3^2)+x_4x_1^2(x_2x_3+x_3^2)",
        normalized: Some(r"x_0(x_2x_3^3+x_3^4)+x_1(x_2^2x_3^2+x_2x_3^3+x_3^4)+x_4^2(x_0x_1^2+x_1^3)+x_4x_0x_1(x_3^2)+x_4x_1^2(x_2x_3+x_3^2)"),
        note: Some(r"x_1 x_3^3 has degree 4; read as x_1 x_3^4"),
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US1-D",
        context: "MO-D",
        printed: r"q_4(x_2,x_3,x_4) + q_{1,3}(x_1,x_2 \parallel x_3,x_4)+q_4(x_3,x_4)+x_1x_2x_4^2",
        normalized: Some(r"x_0 ( q_4(x_2,x_3,x_4) + q_{1,3}(x_1,x_2 \parallel x_3,x_4)+q_4(x_3,x_4)+x_1x_2x_4^2 )"),
        note: Some(r"printed without the common factor x_0 (degree 4); the factor is restored"),
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US2-D",
        context: "MO-D",
        printed: r"x_2^2x_3x_4+ q_{1,3}(x_1,x_2 \parallel x_3,x_4)+q_4(x_3,x_4)+q_2(x_1,x_2,x_3)x_4^2+q_1(x_1,x_2,x_3)x_4^3",
        normalized: Some(r"x_0 ( x_2^2x_3x_4+ q_{1,3}(x_1,x_2 \parallel x_3,x_4)+q_4(x_3,x_4)+q_2(x_1,x_2,x_3)x_4^2+q_1(x_1,x_2,x_3)x_4^3 )"),
        note: Some(r"printed without the common factor x_0 (degree 4); the factor is restored"),
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US3-D",
        context: "MO-D",
        printed: r"x_2q_3(x_3,x_4)+q_4(x_3,x_4)+q_3(x_2,x_3)x_4+q_2(x_2,x_3)x_4^2+q_1(x_2,x_3)x_4^3+q_1(x_1,x_2)x_3^2x_4+q_2(x_1,x_2,x_3)x_4^2+q_1(x_1,x_2,x_3)x_4^3",
        normalized: Some(r"x_0 ( x_2q_3(x_3,x_4)+q_4(x_3,x_4)+q_3(x_2,x_3)x_4+q_2(x_2,x_3)x_4^2+q_1(x_2,x_3)x_4^3+q_1(x_1,x_2)x_3^2x_4+q_2(x_1,x_2,x_3)x_4^2+q_1(x_1,x_2,x_3)x_4^3 )"),
        note: Some(r"printed without the common factor x_0 (degree 4); the factor is restored"),
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US1-I",
        context: "MO2-I",
        printed: r"x_0^2x_2x_4^2",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US2-I",
        context: "MO2-I",
        printed: r"x_1^2x_2x_3^2",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US1-II",
        context: "MO2-II",
        printed: r"x_0^2x_3x_4^2+x_0x_1x_3^2",
        normalized: Some(r"x_0^2x_3x_4^2+x_0x_1x_3^3"),
        note: Some(r"x_0x_1x_3^2 has degree 4; read as x_0x_1x_3^3"),
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US2-II",
        context: "MO2-II",
        printed: r"x_0x_1x_3^2+x_1^2x_2^2x_3",
        normalized: Some(r"x_0x_1x_3^3+x_1^2x_2^2x_3"),
        note: Some(r"x_0x_1x_3^2 has degree 4; read as x_0x_1x_3^3"),
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US3-II",
        context: "MO2-II",
        printed: r"x_0x_1x_3^2",
        normalized: Some(r"x_0x_1x_3^3"),
        note: Some(r"x_0x_1x_3^2 has degree 4; read as x_0x_1x_3^3"),
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US4-II",
        context: "MO2-II",
        printed: r"x_0^2x_3x_4^2",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US5-II",
        context: "MO2-II",
        printed: r"x_1^2x_2^2x_3",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US1-III",
        context: "MO2-III",
        printed: r"x_0^2 \bigg( x_2x_4^2 + x_3^2x_4  \bigg) + x_0x_1 \bigg(  x_3^3  \bigg)",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US2-III",
        context: "MO2-III",
        printed: r"x_0x_1 \bigg(  x_3^3 +  \bigg) + x_1^2 \bigg( x_2x_3^2 + x_2^2x_4   \bigg)",
        normalized: Some(r"x_0x_1 ( x_3^3 ) + x_1^2 ( x_2x_3^2 + x_2^2x_4 )"),
        note: Some(r#"stray "+" after x_3^3 dropped"#),
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US3-III",
        context: "MO2-III",
        printed: r"x_0^2 \bigg(  x_3^2x_4  \bigg) + x_0x_1 \bigg(  x_3^3  \bigg) + x_1^2 \bigg( x_2x_3^2   \bigg)",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US4-III",
        context: "MO2-III",
        printed: r"x_0^2 \bigg( x_2x_4^2   \bigg) + x_0x_1 \bigg(  x_3^3  \bigg) + x_1^2 \bigg(  x_2^2x_4   \bigg)",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US5-III",
        context: "MO2-III",
        printed: r"x_0^2 \bigg( x_2x_4^2 + x_3^2x_4  \bigg)",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US6-III",
        context: "MO2-III",
        printed: r"x_1^2 \bigg( x_2x_3^2 + x_2^2x_4   \bigg)",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US7-III",
        context: "MO2-III",
        printed: r"x_0^2 \bigg(  x_3^2x_4  \bigg)  + x_1^2 \bigg( x_2x_3^2   \bigg)",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US8-III",
        context: "MO2-III",
        printed: r"x_0^2 \bigg( x_2x_4^2   \bigg)  + x_1^2 \bigg(  x_2^2x_4   \bigg)",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US9-III",
        context: "MO2-III",
        printed: r"x_0^2 \bigg( x_2x_4^2   \bigg) + x_0x_1 \bigg(  x_3^3  \bigg)",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US10-III",
        context: "MO2-III",
        printed: r"x_0x_1 \bigg(  x_3^3 +  \bigg) + x_1^2 \bigg(  x_2^2x_4   \bigg)",
        normalized: Some(r"x_0x_1 ( x_3^3 ) + x_1^2 ( x_2^2x_4 )"),
        note: Some(r#"stray "+" after x_3^3 dropped"#),
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US11-III",
        context: "MO2-III",
        printed: r"x_0^2 \bigg(  x_3^2x_4  \bigg) + x_0x_1 \bigg(  x_3^3  \bigg)",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US12-III",
        context: "MO2-III",
        printed: r"x_0x_1 \bigg(  x_3^3 +  \bigg) + x_1^2 \bigg( x_2x_3^2   \bigg)",
        normalized: Some(r"x_0x_1 ( x_3^3 ) + x_1^2 ( x_2x_3^2 )"),
        note: Some(r#"stray "+" after x_3^3 dropped"#),
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US13-III",
        context: "MO2-III",
        printed: r"x_0^2 \bigg( x_2x_4^2  \bigg)",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US14-III",
        context: "MO2-III",
        printed: r"x_0^2 \bigg( x_3^2x_4  \bigg)",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US15-III",
        context: "MO2-III",
        printed: r"x_0x_1 \bigg(  x_3^3 \bigg)",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US16-III",
        context: "MO2-III",
        printed: r"x_1^2 \bigg( x_2x_3^2  \bigg)",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US17-III",
        context: "MO2-III",
        printed: r"x_1^2 \bigg( x_2^2x_4   \bigg)",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US1-IV",
        context: "MO2-IV",
        printed: r"x_0x_4x_1x_3^2",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US1-VI",
        context: "MO2-VI",
        printed: r"(  x_1x_2^3x_3 + x_1^2x_2x_3^2 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US2-VI",
        context: "MO2-VI",
        printed: r"( x_1x_2^3x_3 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US3-VI",
        context: "MO2-VI",
        printed: r"( x_1^2x_2x_3^2 )",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US1-VII",
        context: "MO2-VII",
        printed: r"x_4x_1^2x_2^2",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US2-VII",
        context: "MO2-VII",
        printed: r"x_4x_0^2x_3^2",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US1-VIII",
        context: "MO2-VIII",
        printed: r"x_0x_1 \bigg( q_3(x_3,x_4)+x_2x_4^2 \bigg)",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US1-IX",
        context: "MO2-IX",
        printed: r"x_0 \bigg(  x_2^2 \parallel x_3x_4 + x_4^2 \bigg)",
        normalized: Some(r"x_0 ( x_2^2 ) ( x_3x_4 + x_4^2 )"),
        note: Some(r#""a \parallel b" read as the product of the two factors"#),
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US2-IX",
        context: "MO2-IX",
        printed: r"x_0 \bigg( x_1x_2 + x_2^2 \parallel  x_4^2 \bigg)",
        normalized: Some(r"x_0 ( x_1x_2 + x_2^2 ) ( x_4^2 )"),
        note: Some(r#""a \parallel b" read as the product of the two factors"#),
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US3-IX",
        context: "MO2-IX",
        printed: r"x_0 \bigg(  x_2^2 \parallel  x_4^2 \bigg)",
        normalized: Some(r"x_0 ( x_2^2 ) ( x_4^2 )"),
        note: Some(r#""a \parallel b" read as the product of the two factors"#),
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US1-X",
        context: "MO2-X",
        printed: r"x_0 \bigg( x_2^2x_3^2+x_2x_3^3+x_3^4 + x_1x_3^2x_4 + x_1^2x_4^2 \bigg)",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
    PrintedFamily {
        label: "US2-X",
        context: "MO2-X",
        printed: r"x_0 \bigg( x_2x_3^3+x_3^4 + x_1(x_2x_3+x_3^2)x_4 + x_1^2x_4^2 \bigg)",
        normalized: None,
        note: None,
        destabilizer: Printed1Ps::Absent,
        target: None,
    },
];
