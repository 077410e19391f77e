//! Steiner triple systems, PBD(v, {3, 5*}) and the Bose-style geometries built from them.

use std::fmt::Write as _;

use super::quasigroup::{cyclic_idempotent_quasigroup, Quasigroup};
use crate::design::{Design, PairCoverage, Point};
use crate::error::{Error, Result};
use crate::format::{self, Header};

/// Checks that every pair of `0..v` lies in exactly one block; returns the first bad pair.
fn exact_pair_cover(v: usize, blocks: &[&[Point]]) -> std::result::Result<(), (Point, Point, u8)> {
    let cov = PairCoverage::from_lines(v, blocks);
    for y in 1..v {
        for x in 0..y {
            let c = cov.get(x, y);
            if c != 1 {
                return Err((x, y, c));
            }
        }
    }
    Ok(())
}

fn check_block(what: &'static str, v: usize, block: &[Point]) -> Result<()> {
    let mut sorted = block.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != block.len() || sorted.last().is_some_and(|&p| p >= v) {
        return Err(Error::invalid(what, format!("bad block {block:?} on {v} points")));
    }
    Ok(())
}

/// A Steiner triple system: every pair of points in exactly one triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sts {
    v: usize,
    triples: Vec<[Point; 3]>,
}

impl Sts {
    pub fn new(v: usize, mut triples: Vec<[Point; 3]>) -> Result<Self> {
        if v % 6 != 1 && v % 6 != 3 {
            return Err(Error::invalid("STS", format!("order {v} is not 1 or 3 mod 6")));
        }
        for t in &mut triples {
            check_block("STS", v, t)?;
            t.sort_unstable();
        }
        triples.sort_unstable();
        let blocks: Vec<&[Point]> = triples.iter().map(|t| &t[..]).collect();
        exact_pair_cover(v, &blocks)
            .map_err(|(x, y, c)| Error::invalid("STS", format!("pair ({x}, {y}) covered {c} times")))?;
        Ok(Sts { v, triples })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn triples(&self) -> &[[Point; 3]] {
        &self.triples
    }

    /// `x . x = x`, and `x . y` is the third point of the triple through `x` and `y`.
    pub fn steiner_quasigroup(&self) -> Quasigroup {
        let n = self.v;
        let mut table: Vec<usize> = (0..n * n).map(|i| if i / n == i % n { i / n } else { usize::MAX }).collect();
        for &[a, b, c] in &self.triples {
            for (x, y, z) in [(a, b, c), (a, c, b), (b, c, a)] {
                table[x * n + y] = z;
                table[y * n + x] = z;
            }
        }
        Quasigroup::from_table(n, table).expect("an STS yields a Latin square")
    }
}

pub fn steiner_quasigroup(s: &Sts) -> Quasigroup {
    s.steiner_quasigroup()
}

/// The Bose triple system on `Q x Z_3` for `Q` the cyclic idempotent quasigroup of
/// order `n / 3`. Point `(x, i)` is `3x + i`.
pub fn sts_bose(n: usize) -> Result<Sts> {
    if n % 6 != 3 {
        return Err(Error::precondition(format!("Bose construction needs v = 3 mod 6, got {n}")));
    }
    let q = cyclic_idempotent_quasigroup(n / 3)?;
    let m = q.order();
    let mut triples: Vec<[Point; 3]> = (0..m).map(|x| [3 * x, 3 * x + 1, 3 * x + 2]).collect();
    for x in 0..m {
        for y in x + 1..m {
            for i in 0..3 {
                triples.push([3 * x + i, 3 * y + i, 3 * q.op(x, y) + (i + 1) % 3]);
            }
        }
    }
    Sts::new(n, triples)
}

/// The reduced Bose structure on `(Q \ {a}) x Z_3`: drop the vertical triple of `a`
/// and every transversal triple meeting it. Point `(x, i)` becomes `3 x' + i`, with
/// `x'` the rank of `x` among the points other than `a`.
pub fn bose_pent3_from_quasigroup(q: &Quasigroup, a: Point) -> Result<Design> {
    let n = q.order();
    if a >= n {
        return Err(Error::precondition(format!("point {a} not in quasigroup of order {n}")));
    }
    if n < 3 || n.is_multiple_of(2) || !q.is_commutative() || !q.is_idempotent() {
        return Err(Error::precondition("Bose construction needs a commutative idempotent quasigroup of odd order >= 3"));
    }
    let rank = |x: Point| if x < a { x } else { x - 1 };
    let mut lines = Vec::new();
    for x in (0..n).filter(|&x| x != a) {
        lines.push(vec![3 * rank(x), 3 * rank(x) + 1, 3 * rank(x) + 2]);
    }
    for x in 0..n {
        for y in x + 1..n {
            let z = q.op(x, y);
            if x == a || y == a || z == a {
                continue;
            }
            for i in 0..3 {
                lines.push(vec![3 * rank(x) + i, 3 * rank(y) + i, 3 * rank(z) + (i + 1) % 3]);
            }
        }
    }
    let r = (3 * n - 1) / 2 - 3;
    Ok(Design::new(3 * (n - 1), 3, lines)?.with_claimed_r(Some(r)))
}

/// PENT(3, 9s-2) from an STS(6s+1), PENT(3, 9s+1) from an STS(6s+3).
pub fn bose_pent3(s: &Sts, a: Point) -> Result<Design> {
    if s.v() < 7 {
        return Err(Error::precondition(format!("need an STS of order >= 7, got {}", s.v())));
    }
    bose_pent3_from_quasigroup(&s.steiner_quasigroup(), a)
}

/// A PBD(v, {3, 5*}): triples plus one distinguished 5-block, every pair exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pbd {
    v: usize,
    distinguished: [Point; 5],
    triples: Vec<[Point; 3]>,
}

impl Pbd {
    pub fn new(v: usize, distinguished: [Point; 5], mut triples: Vec<[Point; 3]>) -> Result<Self> {
        if v % 6 != 5 {
            return Err(Error::invalid("PBD", format!("order {v} is not 5 mod 6")));
        }
        check_block("PBD", v, &distinguished)?;
        for t in &mut triples {
            check_block("PBD", v, t)?;
            t.sort_unstable();
        }
        triples.sort_unstable();
        let mut blocks: Vec<&[Point]> = vec![&distinguished];
        blocks.extend(triples.iter().map(|t| &t[..]));
        exact_pair_cover(v, &blocks)
            .map_err(|(x, y, c)| Error::invalid("PBD", format!("pair ({x}, {y}) covered {c} times")))?;
        Ok(Pbd { v, distinguished, triples })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn distinguished(&self) -> &[Point; 5] {
        &self.distinguished
    }

    pub fn triples(&self) -> &[[Point; 3]] {
        &self.triples
    }

    /// Steiner rule on the triples; on the distinguished block, listed in order as
    /// `Z_5`, the midpoint rule `x . y = (x + y) / 2`.
    pub fn quasigroup(&self) -> Quasigroup {
        let n = self.v;
        let mut table: Vec<usize> = (0..n * n).map(|i| if i / n == i % n { i / n } else { usize::MAX }).collect();
        for &[a, b, c] in &self.triples {
            for (x, y, z) in [(a, b, c), (a, c, b), (b, c, a)] {
                table[x * n + y] = z;
                table[y * n + x] = z;
            }
        }
        let d = &self.distinguished;
        for i in 0..5 {
            for j in 0..5 {
                if i != j {
                    // 3 is the inverse of 2 mod 5
                    table[d[i] * n + d[j]] = d[(3 * (i + j)) % 5];
                }
            }
        }
        Quasigroup::from_table(n, table).expect("a PBD(v, {3, 5*}) yields a Latin square")
    }
}

/// PENT(3, 9s+4) from a PBD(6s+5, {3, 5*}); `a` must lie outside the distinguished block.
pub fn pbd_pent3(p: &Pbd, a: Point) -> Result<Design> {
    if a >= p.v() {
        return Err(Error::precondition(format!("point {a} not in PBD on {} points", p.v())));
    }
    if p.distinguished.contains(&a) {
        return Err(Error::precondition(format!("point {a} lies in the distinguished block")));
    }
    bose_pent3_from_quasigroup(&p.quasigroup(), a)
}

fn triple(rec: &format::Record<'_>) -> Result<[Point; 3]> {
    rec.usizes()?.try_into().map_err(|_| rec.error("triple needs exactly three points"))
}

pub fn parse_sts(text: &str) -> Result<Sts> {
    let mut header = Header::default();
    let mut triples = Vec::new();
    for rec in format::records(text)? {
        match rec.key {
            "triple" => triples.push(triple(&rec)?),
            "kind" | "v" => header.set(rec)?,
            other => return Err(rec.error(format!("unknown key `{other}` in STS file"))),
        }
    }
    header.expect_kind(&["sts"])?;
    Sts::new(header.required_usize("v")?, triples)
}

pub fn serialize_sts(s: &Sts) -> String {
    let mut out = format!("kind: sts\nv: {}\n", s.v);
    for [a, b, c] in &s.triples {
        writeln!(out, "triple: {a} {b} {c}").unwrap();
    }
    out
}

pub fn parse_pbd(text: &str) -> Result<Pbd> {
    let mut header = Header::default();
    let mut triples = Vec::new();
    for rec in format::records(text)? {
        match rec.key {
            "triple" => triples.push(triple(&rec)?),
            "kind" | "v" | "distinguished" => header.set(rec)?,
            other => return Err(rec.error(format!("unknown key `{other}` in PBD file"))),
        }
    }
    header.expect_kind(&["pbd"])?;
    let rec = header.get("distinguished").ok_or_else(|| Error::parse(0, "missing `distinguished:` header"))?;
    let distinguished: [Point; 5] =
        rec.usizes()?.try_into().map_err(|_| rec.error("distinguished block needs exactly five points"))?;
    Pbd::new(header.required_usize("v")?, distinguished, triples)
}

pub fn serialize_pbd(p: &Pbd) -> String {
    let d = p.distinguished.map(|x| x.to_string()).join(" ");
    let mut out = format!("kind: pbd\nv: {}\ndistinguished: {d}\n", p.v);
    for [a, b, c] in &p.triples {
        writeln!(out, "triple: {a} {b} {c}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{count_olps, verify_pentagonal};

    fn fano() -> Sts {
        Sts::new(7, (0..7).map(|i| [i, (i + 1) % 7, (i + 3) % 7]).collect()).unwrap()
    }

    #[test]
    fn bose_sts_sizes() {
        assert_eq!(sts_bose(9).unwrap().triples().len(), 12);
        assert_eq!(sts_bose(15).unwrap().triples().len(), 35);
        for n in [21, 27] {
            assert_eq!(sts_bose(n).unwrap().triples().len(), n * (n - 1) / 6);
        }
        assert!(matches!(sts_bose(7), Err(Error::Precondition(_))));
    }

    #[test]
    fn steiner_quasigroup_of_fano() {
        let q = fano().steiner_quasigroup();
        assert_eq!(q.op(0, 1), 3);
        assert!(q.is_latin() && q.is_commutative() && q.is_idempotent());
    }

    #[test]
    fn steiner_quasigroups_satisfy_axioms() {
        for n in [9, 15, 21, 27] {
            let q = sts_bose(n).unwrap().steiner_quasigroup();
            assert!(q.is_latin() && q.is_commutative() && q.is_idempotent(), "order {n}");
        }
    }

    #[test]
    fn bose_on_fano_is_pent_3_7() {
        let d = bose_pent3(&fano(), 0).unwrap();
        assert_eq!((d.v(), d.b()), (18, 42));
        let rep = verify_pentagonal(&d);
        assert!(rep.pentagonal, "{:?}", rep.all_violations().collect::<Vec<_>>());
        assert_eq!(rep.r, Some(7));
        let olps = count_olps(&d);
        assert_eq!(olps.q(), 3);
        assert!(olps.partitions_points(&d));
    }

    #[test]
    fn bose_on_sts9_is_maximal_pent_3_10() {
        let d = bose_pent3(&sts_bose(9).unwrap(), 0).unwrap();
        assert_eq!((d.v(), d.b()), (24, 80));
        assert!(verify_pentagonal(&d).pentagonal);
        assert_eq!(count_olps(&d).q(), 4);
    }

    #[test]
    fn sts_validation() {
        assert!(Sts::new(7, vec![[0, 1, 2]]).is_err());
        assert!(Sts::new(5, vec![]).is_err());
        assert!(Sts::new(7, (0..7).map(|i| [i, (i + 1) % 7, (i + 2) % 7]).collect()).is_err());
    }

    #[test]
    fn pbd_validation_and_precondition() {
        // PBD(5, {3, 5*}) is just the distinguished block; the order must still be 5 mod 6
        let trivial = Pbd::new(5, [0, 1, 2, 3, 4], vec![]).unwrap();
        assert!(pbd_pent3(&trivial, 0).is_err());
        assert!(pbd_pent3(&trivial, 7).is_err());
        assert!(Pbd::new(11, [0, 1, 2, 3, 4], vec![]).is_err());
        let q = trivial.quasigroup();
        assert!(q.is_latin() && q.is_commutative() && q.is_idempotent());
    }

    #[test]
    fn sts_file_round_trip() {
        let s = fano();
        assert_eq!(parse_sts(&serialize_sts(&s)).unwrap(), s);
        assert!(parse_sts("kind: sts\nv: 7\ntriple: 0 1\n").is_err());
    }
}
