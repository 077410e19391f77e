use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::analysis::verify_pentagonal;
use crate::design::{Design, Line, PairCoverage, Point};
use crate::error::{Error, Result};
use crate::format::{self, Header};

/// A k-group divisible design: groups partition the points and every pair of
/// points lies in exactly one group or exactly one block, never both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gdd {
    v: usize,
    k: usize,
    groups: Vec<Vec<Point>>,
    blocks: Vec<Line>,
}

impl Gdd {
    pub fn new(v: usize, k: usize, mut groups: Vec<Vec<Point>>, mut blocks: Vec<Line>) -> Result<Self> {
        let mut group_of = vec![usize::MAX; v];
        for g in &mut groups {
            g.sort_unstable();
        }
        for (gi, g) in groups.iter().enumerate() {
            for &p in g {
                if p >= v {
                    return Err(Error::invalid("GDD", format!("group point {p} out of range 0..{v}")));
                }
                if group_of[p] != usize::MAX {
                    return Err(Error::invalid("GDD", format!("point {p} lies in two groups")));
                }
                group_of[p] = gi;
            }
        }
        if let Some(p) = group_of.iter().position(|&g| g == usize::MAX) {
            return Err(Error::invalid("GDD", format!("point {p} lies in no group")));
        }
        for b in &mut blocks {
            b.sort_unstable();
            if b.len() != k || b.windows(2).any(|w| w[0] == w[1]) || b.iter().any(|&p| p >= v) {
                return Err(Error::invalid("GDD", format!("bad block {b:?}")));
            }
        }
        blocks.sort_unstable();
        let cov = PairCoverage::from_lines(v, &blocks);
        for y in 1..v {
            for x in 0..y {
                let same_group = group_of[x] == group_of[y];
                let c = cov.get(x, y);
                match (same_group, c) {
                    (true, 0) | (false, 1) => {}
                    (true, _) => return Err(Error::invalid("GDD", format!("pair ({x}, {y}) lies in a group and a block"))),
                    (false, _) => return Err(Error::invalid("GDD", format!("pair ({x}, {y}) covered by {c} blocks"))),
                }
            }
        }
        Ok(Gdd { v, k, groups, blocks })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn groups(&self) -> &[Vec<Point>] {
        &self.groups
    }

    pub fn blocks(&self) -> &[Line] {
        &self.blocks
    }

    /// Exponential notation for the group sizes, smallest size first, e.g. `10^4 24^1`.
    pub fn type_string(&self) -> String {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for g in &self.groups {
            *counts.entry(g.len()).or_default() += 1;
        }
        counts.iter().map(|(size, n)| format!("{size}^{n}")).collect::<Vec<_>>().join(" ")
    }
}

/// 3-GDD of type `g^3` from the addition table of `Z_g`: groups `{0..g}`, `{g..2g}`,
/// `{2g..3g}` and blocks `{i, g + j, 2g + (i + j) mod g}`.
pub fn td3(g: usize) -> Result<Gdd> {
    if g < 2 {
        return Err(Error::precondition(format!("group size {g} < 2")));
    }
    let groups = (0..3).map(|f| (f * g..(f + 1) * g).collect()).collect();
    let blocks = (0..g).flat_map(|i| (0..g).map(move |j| vec![i, g + j, 2 * g + (i + j) % g])).collect();
    Gdd::new(3 * g, 3, groups, blocks)
}

/// PENT(k, 1): two disjoint lines `{0..k}` and `{k..2k}`.
pub fn degenerate_pent(k: usize) -> Result<Design> {
    if k < 2 {
        return Err(Error::precondition(format!("block size {k} < 2")));
    }
    Ok(Design::new(2 * k, k, vec![(0..k).collect(), (k..2 * k).collect()])?.with_claimed_r(Some(1)))
}

/// Places a pentagonal geometry on every group of `g` and adjoins the GDD blocks.
///
/// `parts` pairs each group index with a design on that group's size; point `j`
/// of a part maps to the `j`-th smallest point of its group. The result is fully
/// verified before it is returned.
pub fn gdd_compose(g: &Gdd, parts: &[(usize, Design)]) -> Result<Design> {
    let k = g.k();
    let n = g.groups().len();
    let mut assigned: Vec<Option<&Design>> = vec![None; n];
    for (gi, part) in parts {
        let slot = assigned
            .get_mut(*gi)
            .ok_or_else(|| Error::precondition(format!("group index {gi} out of range (GDD has {n} groups)")))?;
        if slot.is_some() {
            return Err(Error::precondition(format!("group {gi} given two parts")));
        }
        *slot = Some(part);
    }
    let mut r_total = 0;
    let mut lines: Vec<Line> = g.blocks().to_vec();
    for (gi, part) in assigned.iter().enumerate() {
        let part = part.ok_or_else(|| Error::precondition(format!("no part for group {gi}")))?;
        let group = &g.groups()[gi];
        if part.k() != k {
            return Err(Error::precondition(format!("part for group {gi} has block size {}, GDD has {k}", part.k())));
        }
        if part.v() != group.len() {
            return Err(Error::precondition(format!(
                "group {gi} has {} points but its part has {}",
                group.len(),
                part.v()
            )));
        }
        let rep = verify_pentagonal(part);
        if !rep.pentagonal {
            return Err(Error::precondition(format!("part for group {gi} is not a pentagonal geometry")));
        }
        r_total += rep.r.expect("pentagonal implies regular");
        lines.extend(part.lines().iter().map(|l| l.iter().map(|&p| group[p]).collect::<Line>()));
    }
    let extra = (n - 1) * (k + 1);
    if !extra.is_multiple_of(k - 1) {
        return Err(Error::precondition(format!("(n-1)(k+1)/(k-1) = {extra}/{} is not an integer", k - 1)));
    }
    let r = r_total + extra / (k - 1);
    let d = Design::new(g.v(), k, lines)?.with_claimed_r(Some(r));
    let rep = verify_pentagonal(&d);
    if !rep.pentagonal {
        let first = rep.all_violations().next().map(|v| v.to_string()).unwrap_or_default();
        return Err(Error::invalid("composition", format!("result is not pentagonal: {first}")));
    }
    Ok(d)
}

pub fn parse_gdd(text: &str) -> Result<Gdd> {
    let mut header = Header::default();
    let mut groups = Vec::new();
    let mut blocks = Vec::new();
    for rec in format::records(text)? {
        match rec.key {
            "group" => {
                if !blocks.is_empty() {
                    return Err(rec.error("`group:` records must precede `block:` records"));
                }
                groups.push(rec.usizes()?)
            }
            "block" => blocks.push(rec.usizes()?),
            "kind" | "k" | "v" => header.set(rec)?,
            other => return Err(rec.error(format!("unknown key `{other}` in GDD file"))),
        }
    }
    header.expect_kind(&["gdd"])?;
    Gdd::new(header.required_usize("v")?, header.required_usize("k")?, groups, blocks)
}

pub fn serialize_gdd(g: &Gdd) -> String {
    let mut out = format!("kind: gdd\nk: {}\nv: {}\n", g.k, g.v);
    let join = |pts: &[Point]| pts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ");
    for grp in &g.groups {
        writeln!(out, "group: {}", join(grp)).unwrap();
    }
    for b in &g.blocks {
        writeln!(out, "block: {}", join(b)).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::count_olps;

    #[test]
    fn td3_sizes() {
        assert_eq!(td3(6).unwrap().blocks().len(), 36);
        assert_eq!(td3(2).unwrap().blocks().len(), 4);
        let g = td3(10).unwrap();
        assert_eq!(g.blocks().len(), 100);
        assert_eq!(g.type_string(), "10^3");
    }

    #[test]
    fn degenerate_pairs() {
        let d = degenerate_pent(3).unwrap();
        assert_eq!(d.lines(), &[vec![0, 1, 2], vec![3, 4, 5]]);
        assert_eq!((degenerate_pent(4).unwrap().v(), degenerate_pent(4).unwrap().b()), (8, 2));
        for k in 2..=7 {
            assert_eq!(count_olps(&degenerate_pent(k).unwrap()).q(), 1);
        }
    }

    #[test]
    fn td6_with_degenerate_parts() {
        let g = td3(6).unwrap();
        let parts: Vec<_> = (0..3).map(|i| (i, degenerate_pent(3).unwrap())).collect();
        let d = gdd_compose(&g, &parts).unwrap();
        assert_eq!((d.v(), d.b()), (18, 42));
        assert_eq!(d.r_claimed(), Some(7));
        assert_eq!(count_olps(&d).q(), 3);
    }

    #[test]
    fn group_size_mismatch() {
        let g = td3(6).unwrap();
        let p = crate::graph::moore_pent(&crate::graph::Graph::petersen(), 3).unwrap();
        let parts = vec![(0, degenerate_pent(3).unwrap()), (1, p.clone()), (2, p)];
        assert!(matches!(gdd_compose(&g, &parts), Err(Error::Precondition(_))));
        let parts = vec![(0, degenerate_pent(3).unwrap()), (1, degenerate_pent(3).unwrap())];
        assert!(matches!(gdd_compose(&g, &parts), Err(Error::Precondition(_))));
    }

    #[test]
    fn non_pentagonal_part_rejected() {
        let g = td3(6).unwrap();
        let broken = Design::new(6, 3, vec![vec![0, 1, 2]]).unwrap();
        let parts = vec![(0, broken), (1, degenerate_pent(3).unwrap()), (2, degenerate_pent(3).unwrap())];
        assert!(matches!(gdd_compose(&g, &parts), Err(Error::Precondition(_))));
    }

    #[test]
    fn pair_in_group_and_block_rejected() {
        let text = "kind: gdd\nk: 3\nv: 6\ngroup: 0 1\ngroup: 2 3\ngroup: 4 5\nblock: 0 1 2\n";
        let err = parse_gdd(text).unwrap_err();
        assert!(err.to_string().contains("(0, 1) lies in a group and a block"), "{err}");
    }

    #[test]
    fn gdd_file_round_trip() {
        let g = td3(3).unwrap();
        assert_eq!(parse_gdd(&serialize_gdd(&g)).unwrap(), g);
    }
}
