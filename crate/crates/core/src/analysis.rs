//! Opposite lines, opposite line pairs and the counting arguments specific to
//! pentagonal geometries.

use crate::design::{verify_pls, Design, Line, Point, VerificationReport, Violation, ViolationCode};
use crate::error::{Error, Result};
use crate::graph::{self, ComponentTag};

/// Points not collinear with `x` (excluding `x` itself).
pub fn opposite_line(d: &Design, x: Point) -> Vec<Point> {
    let cov = d.pair_coverage();
    opposite_with(&cov, d.v(), x)
}

fn opposite_with(cov: &crate::design::PairCoverage, v: usize, x: Point) -> Vec<Point> {
    (0..v).filter(|&y| !cov.collinear(x, y)).collect()
}

/// Every point's opposite set, with the index of the equal design line when there is one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OppositeLineMap {
    pub opposite: Vec<Vec<Point>>,
    pub line_index: Vec<Option<usize>>,
}

pub fn opposite_line_map(d: &Design) -> OppositeLineMap {
    let cov = d.pair_coverage();
    let opposite: Vec<Vec<Point>> = (0..d.v()).map(|x| opposite_with(&cov, d.v(), x)).collect();
    let line_index = opposite.iter().map(|o| d.line_index(o).filter(|_| o.len() == d.k())).collect();
    OppositeLineMap { opposite, line_index }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PentagonalReport {
    pub pls: VerificationReport,
    pub pentagonal: bool,
    pub v: usize,
    pub b: usize,
    pub k: usize,
    /// Common replication number, when the design is regular.
    pub r: Option<usize>,
    /// `v = rk - r + k + 1` and `b = vr/k`.
    pub count_consistent: bool,
    pub violations: Vec<Violation>,
}

impl PentagonalReport {
    /// All violations, PLS ones first.
    pub fn all_violations(&self) -> impl Iterator<Item = &Violation> {
        self.pls.violations.iter().chain(&self.violations)
    }
}

pub fn verify_pentagonal(d: &Design) -> PentagonalReport {
    let pls = verify_pls(d);
    let map = opposite_line_map(d);
    let mut violations = Vec::new();
    for (x, opp) in map.opposite.iter().enumerate() {
        if opp.len() != d.k() {
            violations.push(Violation { code: ViolationCode::OppositeWrongSize, points: vec![x], lines: vec![] });
        } else if map.line_index[x].is_none() {
            violations.push(Violation { code: ViolationCode::OppositeNotALine, points: vec![x], lines: vec![] });
        }
    }
    let r = d.uniform_replication();
    let count_consistent = match r {
        Some(r) => {
            let p = crate::design::parameters(d.k(), r);
            p.v == d.v() && p.b == Some(d.b())
        }
        None => false,
    };
    let pentagonal = pls.is_pls && pls.is_uniform && pls.is_regular && violations.is_empty() && d.v() > 0;
    PentagonalReport { pentagonal, v: d.v(), b: d.b(), k: d.k(), r, count_consistent, pls, violations }
}

/// Opposite line pairs as pairs of line indices `(l, m)` with `l < m`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OlpSet {
    pub pairs: Vec<(usize, usize)>,
}

impl OlpSet {
    pub fn q(&self) -> usize {
        self.pairs.len()
    }

    pub fn lines<'a>(&'a self, d: &'a Design) -> impl Iterator<Item = (&'a Line, &'a Line)> + 'a {
        self.pairs.iter().map(move |&(l, m)| (&d.lines()[l], &d.lines()[m]))
    }

    /// True iff the pair lines cover every point exactly once.
    pub fn partitions_points(&self, d: &Design) -> bool {
        let mut hit = vec![0usize; d.v()];
        for (l, m) in self.lines(d) {
            for &p in l.iter().chain(m) {
                hit[p] += 1;
            }
        }
        hit.iter().all(|&h| h == 1)
    }
}

/// Mutual pairs `(l, m)`: every point of `l` has opposite line `m` and vice versa.
pub fn count_olps(d: &Design) -> OlpSet {
    let map = opposite_line_map(d);
    let mut pairs = Vec::new();
    for (l, line) in d.lines().iter().enumerate() {
        let Some(m) = map.line_index[line[0]] else { continue };
        if m <= l {
            continue;
        }
        let forward = line.iter().all(|&x| map.line_index[x] == Some(m));
        let backward = d.lines()[m].iter().all(|&y| map.line_index[y] == Some(l));
        if forward && backward {
            pairs.push((l, m));
        }
    }
    OlpSet { pairs }
}

/// Opposite line pairs read off the `K_{k,k}` components of the deficiency graph.
/// Agrees with [`count_olps`] on pentagonal geometries.
pub fn olps_from_deficiency(d: &Design) -> OlpSet {
    let cls = graph::classify(&graph::build_deficiency(d), d.k());
    let mut pairs: Vec<(usize, usize)> = cls
        .components
        .iter()
        .filter_map(|c| match &c.tag {
            ComponentTag::CompleteBipartite { left, right } => {
                let (a, b) = (d.line_index(left)?, d.line_index(right)?);
                Some((a.min(b), a.max(b)))
            }
            _ => None,
        })
        .collect();
    pairs.sort_unstable();
    OlpSet { pairs }
}

/// Upper bound on opposite line pairs in a PENT(3, r).
pub fn max_olps_bound(r: usize) -> Result<usize> {
    match r % 3 {
        1 => Ok(r.div_ceil(3)),
        0 if r >= 3 => Ok((r - 3) / 3),
        _ => Err(Error::precondition(format!("r = {r} is not 0 or 1 mod 3"))),
    }
}

/// Line and point counts forced on a PENT(3, r) with exactly two opposite line pairs,
/// splitting points into A (first pair), B (second pair) and C (the rest).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoOlpCount {
    pub abc_lines: i64,
    pub acc_lines: i64,
    pub bcc_lines: i64,
    pub ccc_lines: i64,
    pub type_c_points: i64,
    pub cc_pairs_covered: i64,
}

impl TwoOlpCount {
    /// Each type-C point needs its own CCC line as opposite line.
    pub fn excluded(&self) -> bool {
        self.ccc_lines < self.type_c_points
    }
}

pub fn two_olp_count(r: usize) -> Result<TwoOlpCount> {
    if r % 3 == 2 || r < 7 {
        return Err(Error::precondition(format!("two-pair count needs r = 0 or 1 mod 3 and r >= 7, got {r}")));
    }
    let r = r as i64;
    let type_c_points = 2 * (r - 4);
    let ab_pairs = 36;
    let ac_pairs = 12 * (r - 4);
    let abc_lines = ab_pairs;
    // each ABC line uses one AC pair; the rest go two per ACC line
    let acc_lines = (ac_pairs - abc_lines) / 2;
    let bcc_lines = acc_lines;
    let cc_pairs = type_c_points * (type_c_points - 1) / 2;
    // every C point has 3 non-collinear C points
    let cc_pairs_covered = cc_pairs - 3 * (r - 4);
    let ccc_numerator = cc_pairs_covered - acc_lines - bcc_lines;
    debug_assert_eq!(ccc_numerator % 3, 0);
    Ok(TwoOlpCount {
        abc_lines,
        acc_lines,
        bcc_lines,
        ccc_lines: ccc_numerator / 3,
        type_c_points,
        cc_pairs_covered,
    })
}

/// True iff no PENT(3, r) can have exactly two opposite line pairs by the counting argument.
pub fn two_olp_excluded(r: usize) -> Result<bool> {
    two_olp_count(r).map(|c| c.excluded())
}

/// Structural facts every pentagonal geometry must satisfy; returns one message per failure.
pub fn invariant_violations(d: &Design) -> Vec<String> {
    let mut out = Vec::new();
    let report = verify_pentagonal(d);
    if !report.pentagonal {
        out.push(format!("not pentagonal: {}", report.all_violations().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")));
        return out;
    }
    let k = d.k();
    let r = report.r.expect("pentagonal implies regular");
    if d.b() * k != d.v() * r {
        out.push(format!("b*k = {} but v*r = {}", d.b() * k, d.v() * r));
    }
    if !report.count_consistent {
        out.push("point/line counts disagree with v = rk - r + k + 1".into());
    }
    let map = opposite_line_map(d);
    for (x, opp) in map.opposite.iter().enumerate() {
        if opp.len() != k {
            out.push(format!("|opp({x})| = {} != {k}", opp.len()));
        }
    }
    let g = graph::build_deficiency(d);
    if g.regular_degree() != Some(k) {
        out.push(format!("deficiency graph not {k}-regular"));
    }
    let cls = graph::classify(&g, k);
    for c in &cls.components {
        if let ComponentTag::Other { cycle } = &c.tag {
            out.push(format!("deficiency component containing {} has short cycle {cycle:?}", c.vertices[0]));
        }
    }
    let olps = count_olps(d);
    if cls.complete_bipartite_count() != olps.q() {
        out.push(format!("{} K_{{k,k}} components but {} opposite line pairs", cls.complete_bipartite_count(), olps.q()));
    }
    if olps_from_deficiency(d) != olps {
        out.push("opposite line pairs from the deficiency graph differ from the direct count".into());
    }
    if k == 3 {
        if let Ok(bound) = max_olps_bound(r) {
            if olps.q() > bound {
                out.push(format!("{} opposite line pairs exceed the bound {bound}", olps.q()));
            }
        }
    }
    if r > 1 && r < 3 * k && olps.q() > 0 && (r != 2 * k + 1 || !olps.partitions_points(d)) {
        out.push(format!("r = {r} with {} opposite line pairs that do not partition the points", olps.q()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degenerate() -> Design {
        Design::new(6, 3, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap()
    }

    #[test]
    fn degenerate_geometry_is_pentagonal() {
        let rep = verify_pentagonal(&degenerate());
        assert!(rep.pentagonal);
        assert_eq!(rep.r, Some(1));
        assert!(rep.count_consistent);
        assert_eq!(opposite_line(&degenerate(), 0), vec![3, 4, 5]);
        let olps = count_olps(&degenerate());
        assert_eq!(olps.pairs, vec![(0, 1)]);
        assert!(olps.partitions_points(&degenerate()));
        assert!(invariant_violations(&degenerate()).is_empty());
    }

    #[test]
    fn pentagon_opposites() {
        // complement of the 5-cycle 0-1-2-3-4
        let lines = vec![vec![0, 2], vec![0, 3], vec![1, 3], vec![1, 4], vec![2, 4]];
        let d = Design::new(5, 2, lines).unwrap();
        for x in 0..5 {
            assert_eq!(opposite_line(&d, x), {
                let mut v = vec![(x + 1) % 5, (x + 4) % 5];
                v.sort();
                v
            });
        }
        assert!(verify_pentagonal(&d).pentagonal);
        assert_eq!(count_olps(&d).q(), 0);
    }

    #[test]
    fn missing_line_breaks_pentagonality() {
        let d = Design::new(6, 3, vec![vec![0, 1, 2]]).unwrap();
        let rep = verify_pentagonal(&d);
        assert!(!rep.pentagonal);
        assert!(rep.violations.iter().any(|v| v.code == ViolationCode::OppositeWrongSize));
    }

    #[test]
    fn max_bound_examples() {
        assert_eq!(max_olps_bound(10).unwrap(), 4);
        assert_eq!(max_olps_bound(12).unwrap(), 3);
        assert_eq!(max_olps_bound(9).unwrap(), 2);
        assert_eq!(max_olps_bound(1).unwrap(), 1);
        assert_eq!(max_olps_bound(3).unwrap(), 0);
        assert!(max_olps_bound(5).is_err());
        assert!(max_olps_bound(0).is_err());
    }

    #[test]
    fn two_olp_chain() {
        let c = two_olp_count(7).unwrap();
        assert_eq!((c.abc_lines, c.acc_lines, c.bcc_lines, c.ccc_lines, c.type_c_points), (36, 0, 0, 2, 6));
        assert!(c.excluded());
        assert!(two_olp_excluded(12).unwrap());
        let c = two_olp_count(13).unwrap();
        assert_eq!((c.ccc_lines, c.type_c_points), (18, 18));
        assert!(!c.excluded());
        assert!(two_olp_excluded(8).is_err());
        assert!(two_olp_excluded(6).is_err());
    }

    #[test]
    fn two_olp_agrees_with_closed_forms() {
        for r in (7..=60).filter(|r| r % 3 != 2) {
            let c = two_olp_count(r).unwrap();
            let ri = r as i64;
            assert_eq!(c.acc_lines, 6 * (ri - 7));
            assert_eq!(c.cc_pairs_covered, 2 * (ri - 4) * (ri - 6));
            assert_eq!(3 * c.ccc_lines, 2 * ri * ri - 32 * ri + 132);
            assert_eq!(c.excluded(), (2 * ri - 19).pow(2) < 49, "r = {r}");
            // lines add up to b = 2r(r+2)/3
            let total = 4 + c.abc_lines + c.acc_lines + c.bcc_lines + c.ccc_lines;
            assert_eq!(3 * total, 2 * ri * (ri + 2));
        }
    }
}
