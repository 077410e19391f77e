//! PENT(2,r): complements of disjoint unions of cycles of length at least 4.

use std::fmt;

use crate::design::{Design, Line};
use crate::error::{Error, Result};
use crate::graph::{build_deficiency, components};

/// Cycle lengths of the deficiency graph of a PENT(2,r), largest first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(Vec<usize>);

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::invalid("cycle type", "no cycles"));
        }
        if let Some(p) = parts.iter().find(|&&p| p < 4) {
            return Err(Error::invalid("cycle type", format!("cycle length {p} < 4")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of points, `r + 3`.
    pub fn v(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn r(&self) -> usize {
        self.v() - 3
    }

    /// Lines are the edges of `K_{r+3}` outside the cycles, which are laid out
    /// on consecutive points.
    pub fn design(&self) -> Design {
        let v = self.v();
        let mut cycle_edge = vec![vec![false; v]; v];
        let mut start = 0;
        for &len in &self.0 {
            for j in 0..len {
                let (a, b) = (start + j, start + (j + 1) % len);
                cycle_edge[a][b] = true;
                cycle_edge[b][a] = true;
            }
            start += len;
        }
        let lines: Vec<Line> = (0..v)
            .flat_map(|x| (x + 1..v).map(move |y| vec![x, y]))
            .filter(|l| !cycle_edge[l[0]][l[1]])
            .collect();
        Design::new(v, 2, lines).expect("complement edges are distinct pairs").with_claimed_r(Some(self.r()))
    }

    /// Canonical form of a PENT(2,r): the sorted component sizes of its deficiency graph.
    pub fn of_design(d: &Design) -> Result<Self> {
        if d.k() != 2 {
            return Err(Error::precondition(format!("cycle type needs k = 2, got k = {}", d.k())));
        }
        let g = build_deficiency(d);
        if g.regular_degree() != Some(2) {
            return Err(Error::precondition("deficiency graph is not 2-regular"));
        }
        CycleType::new(components(&g).iter().map(Vec::len).collect())
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join("+"))
    }
}

/// Partitions of `r + 3` into parts of size at least 4, in reverse lexicographic order.
pub fn cycle_types(r: usize) -> Vec<CycleType> {
    fn go(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<CycleType>) {
        if remaining == 0 {
            out.push(CycleType(current.clone()));
            return;
        }
        for part in (4..=remaining.min(max)).rev() {
            current.push(part);
            go(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(r + 3, r + 3, &mut Vec::new(), &mut out);
    out
}

/// One PENT(2,r) per cycle type; pairwise non-isomorphic.
pub fn pent2_enumerate(r: usize) -> Vec<(CycleType, Design)> {
    cycle_types(r).into_iter().map(|ct| {
        let d = ct.design();
        (ct, d)
    }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{count_olps, verify_pentagonal};

    #[test]
    fn pentagon() {
        let all = pent2_enumerate(2);
        assert_eq!(all.len(), 1);
        let (ct, d) = &all[0];
        assert_eq!(ct.to_string(), "5");
        assert_eq!((d.v(), d.b()), (5, 5));
        assert!(verify_pentagonal(d).pentagonal);
    }

    #[test]
    fn two_squares() {
        let ct = CycleType::new(vec![4, 4]).unwrap();
        let d = ct.design();
        assert_eq!((d.v(), d.b(), ct.r()), (8, 20, 5));
        assert!(verify_pentagonal(&d).pentagonal);
        assert_eq!(count_olps(&d).q(), 2);
        assert_eq!(CycleType::of_design(&d).unwrap(), ct);
    }

    #[test]
    fn ordering_and_names() {
        let names: Vec<String> = cycle_types(7).iter().map(|c| c.to_string()).collect();
        assert_eq!(names, ["10", "6+4", "5+5"]);
        assert_eq!(cycle_types(4).len(), 1);
    }

    #[test]
    fn rejects_short_cycles() {
        assert!(CycleType::new(vec![5, 3]).is_err());
        assert!(CycleType::new(vec![]).is_err());
    }
}
