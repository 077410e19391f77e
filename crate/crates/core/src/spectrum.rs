//! Known existence results for PENT(k, r), kept as a lookup table.
//!
//! Rows are tried in order and the first match wins. Each row carries a short
//! statement of the result it encodes.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpectrumStatus {
    Exists,
    /// Exists, but only without opposite line pairs among the two extreme families.
    ExistsNoOlp,
    /// Exists, but only with the maximum number of opposite line pairs among the two extreme families.
    ExistsMaximal,
    NotExist,
    Open,
}

impl SpectrumStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SpectrumStatus::Exists => "exists",
            SpectrumStatus::ExistsNoOlp => "exists-no-olp",
            SpectrumStatus::ExistsMaximal => "exists-maximal",
            SpectrumStatus::NotExist => "not-exist",
            SpectrumStatus::Open => "open",
        }
    }
}

impl fmt::Display for SpectrumStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumFact {
    pub k: usize,
    pub r: usize,
    pub status: SpectrumStatus,
    /// Short qualifier, e.g. "possible exception".
    pub label: &'static str,
    pub provenance: &'static str,
}

enum Ks {
    Any,
    Is(&'static [usize]),
}

enum Rs {
    All,
    Is(&'static [usize]),
    /// `k` does not divide `r(r - 1)`.
    Indivisible,
    /// `1 < r < k`.
    BelowK,
    EqualK,
    EqualKPlusOne,
}

struct Row {
    k: Ks,
    r: Rs,
    status: SpectrumStatus,
    label: &'static str,
    provenance: &'static str,
}

use SpectrumStatus::*;

const PENT4_POSSIBLE_EXCEPTIONS: &[usize] = &[8, 12, 16, 28, 32, 36, 44, 48, 56, 64, 72];

const TABLE: &[Row] = &[
    Row { k: Ks::Any, r: Rs::Indivisible, status: NotExist, label: "divisibility", provenance: "k must divide r(r-1)" },
    Row { k: Ks::Any, r: Rs::Is(&[1]), status: Exists, label: "degenerate", provenance: "PENT(k,1) is a pair of disjoint k-lines" },
    Row { k: Ks::Any, r: Rs::BelowK, status: NotExist, label: "r < k", provenance: "r > 1 forces r >= k" },
    Row { k: Ks::Is(&[2]), r: Rs::All, status: Exists, label: "k = 2", provenance: "PENT(2,r) is K_{r+3} minus a spanning union of cycles of length >= 4" },
    Row { k: Ks::Is(&[3]), r: Rs::Is(&[4]), status: NotExist, label: "k = 3", provenance: "PENT(k,k+1) exists only for k = 2, 6 and possibly 56" },
    Row { k: Ks::Is(&[3]), r: Rs::Is(&[6]), status: NotExist, label: "k = 3", provenance: "no PENT(3,6), by exhaustive computer search" },
    Row { k: Ks::Is(&[3]), r: Rs::Is(&[7]), status: ExistsMaximal, label: "k = 3", provenance: "maximal PENT(3,r) exist for r = 0,1 mod 3 except 4, 6, 9; PENT(3,r) without opposite line pairs exist except for r = 1, 4, 6, 7" },
    Row { k: Ks::Is(&[3]), r: Rs::Is(&[9]), status: ExistsNoOlp, label: "k = 3", provenance: "a maximal PENT(3,9) would have two opposite line pairs, which is impossible; PENT(3,9) with 0 and with 1 opposite line pair exist" },
    // A PENT(3,10) with three opposite line pairs necessarily has a fourth; not checked here.
    Row { k: Ks::Is(&[3]), r: Rs::All, status: Exists, label: "k = 3", provenance: "both maximal and opposite-line-pair-free PENT(3,r) exist for every other r = 0,1 mod 3" },
    Row { k: Ks::Is(&[4]), r: Rs::Is(&[4, 5]), status: NotExist, label: "k = 4", provenance: "no PENT(4,4) (Moore graph bound) and no PENT(4,5) (k+1 bound)" },
    Row { k: Ks::Is(&[4]), r: Rs::Is(PENT4_POSSIBLE_EXCEPTIONS), status: Open, label: "possible exception", provenance: "PENT(4,r), r = 0 mod 4, exists for r >= 20 except possibly 8,12,16,28,32,36,44,48,56,64,72" },
    Row { k: Ks::Is(&[4]), r: Rs::All, status: Exists, label: "k = 4", provenance: "PENT(4,r) exists for all r = 1 mod 4 except 5, and all r = 0 mod 4 except 4 and the possible exceptions" },
    Row { k: Ks::Is(&[7]), r: Rs::EqualK, status: Exists, label: "r = k", provenance: "PENT(k,k) exists only for k = 2, 3, 7 and possibly 57" },
    Row { k: Ks::Is(&[57]), r: Rs::EqualK, status: Open, label: "r = k", provenance: "PENT(k,k) exists only for k = 2, 3, 7 and possibly 57" },
    Row { k: Ks::Any, r: Rs::EqualK, status: NotExist, label: "r = k", provenance: "PENT(k,k) exists only for k = 2, 3, 7 and possibly 57" },
    Row { k: Ks::Is(&[6]), r: Rs::EqualKPlusOne, status: Exists, label: "r = k+1", provenance: "PENT(k,k+1) exists only for k = 2, 6 and possibly 56" },
    Row { k: Ks::Is(&[56]), r: Rs::EqualKPlusOne, status: Open, label: "r = k+1", provenance: "PENT(k,k+1) exists only for k = 2, 6 and possibly 56" },
    Row { k: Ks::Any, r: Rs::EqualKPlusOne, status: NotExist, label: "r = k+1", provenance: "PENT(k,k+1) exists only for k = 2, 6 and possibly 56" },
    Row { k: Ks::Any, r: Rs::All, status: Open, label: "undetermined", provenance: "no result recorded" },
];

impl Row {
    fn matches(&self, k: usize, r: usize) -> bool {
        let k_ok = match self.k {
            Ks::Any => true,
            Ks::Is(ks) => ks.contains(&k),
        };
        let r_ok = match self.r {
            Rs::All => true,
            Rs::Is(rs) => rs.contains(&r),
            Rs::Indivisible => !crate::design::divisibility_ok(k, r),
            Rs::BelowK => r > 1 && r < k,
            Rs::EqualK => r == k,
            Rs::EqualKPlusOne => r == k + 1,
        };
        k_ok && r_ok
    }
}

/// Looks up the recorded status of PENT(k, r). Requires `k >= 2`, `r >= 1`.
pub fn known_spectrum(k: usize, r: usize) -> SpectrumFact {
    let row = TABLE.iter().find(|row| row.matches(k, r)).expect("table ends with a catch-all row");
    SpectrumFact { k, r, status: row.status, label: row.label, provenance: row.provenance }
}
