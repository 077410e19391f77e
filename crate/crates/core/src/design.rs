//! Incidence structures, pair coverage and partial-linear-space checks.

use std::collections::HashSet;
use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::format::{self, Header};

pub type Point = usize;
pub type Line = Vec<Point>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DesignKind {
    Pent,
    Pls,
    Raw,
}

impl DesignKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DesignKind::Pent => "pent",
            DesignKind::Pls => "pls",
            DesignKind::Raw => "raw",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        match s {
            "pent" => Some(DesignKind::Pent),
            "pls" => Some(DesignKind::Pls),
            "raw" => Some(DesignKind::Raw),
            _ => None,
        }
    }
}

/// A finite incidence structure on the points `0..v` whose lines all have
/// `k` distinct points.
///
/// Lines are kept canonical: sorted internally, and the list of lines sorted
/// lexicographically. Two designs are equal iff their canonical forms are.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Design {
    v: usize,
    k: usize,
    r_claimed: Option<usize>,
    kind: DesignKind,
    lines: Vec<Line>,
}

impl Design {
    pub fn new(v: usize, k: usize, lines: Vec<Line>) -> Result<Self> {
        Self::with_kind(v, k, DesignKind::Pent, lines)
    }

    pub fn with_kind(v: usize, k: usize, kind: DesignKind, mut lines: Vec<Line>) -> Result<Self> {
        if k < 2 {
            return Err(Error::invalid("design", format!("block size {k} < 2")));
        }
        for line in &mut lines {
            check_line(v, k, line).map_err(|m| Error::invalid("design", m))?;
            line.sort_unstable();
        }
        lines.sort_unstable();
        if let Some(w) = lines.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLine(w[0].clone()));
        }
        Ok(Design { v, k, r_claimed: None, kind, lines })
    }

    pub fn with_claimed_r(mut self, r: Option<usize>) -> Self {
        self.r_claimed = r;
        self
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of lines.
    pub fn b(&self) -> usize {
        self.lines.len()
    }

    pub fn r_claimed(&self) -> Option<usize> {
        self.r_claimed
    }

    pub fn kind(&self) -> DesignKind {
        self.kind
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn into_lines(self) -> Vec<Line> {
        self.lines
    }

    /// Index of `line` (any point order) among the canonical lines.
    pub fn line_index(&self, line: &[Point]) -> Option<usize> {
        let mut key = line.to_vec();
        key.sort_unstable();
        self.lines.binary_search(&key).ok()
    }

    pub fn replication(&self) -> Vec<usize> {
        let mut rep = vec![0; self.v];
        for line in &self.lines {
            for &p in line {
                rep[p] += 1;
            }
        }
        rep
    }

    /// The common replication number, if every point lies on the same number of lines.
    pub fn uniform_replication(&self) -> Option<usize> {
        let rep = self.replication();
        match rep.first() {
            Some(&r) if rep.iter().all(|&x| x == r) => Some(r),
            _ => None,
        }
    }

    pub fn pair_coverage(&self) -> PairCoverage {
        PairCoverage::from_lines(self.v, &self.lines)
    }

    /// Applies a point permutation; `perm[x]` is the new label of `x`.
    pub fn relabel(&self, perm: &[Point]) -> Result<Design> {
        if perm.len() != self.v {
            return Err(Error::precondition(format!("permutation of length {} for {} points", perm.len(), self.v)));
        }
        let lines = self.lines.iter().map(|l| l.iter().map(|&p| perm[p]).collect()).collect();
        Ok(Design::with_kind(self.v, self.k, self.kind, lines)?.with_claimed_r(self.r_claimed))
    }
}

fn check_line(v: usize, k: usize, line: &[Point]) -> std::result::Result<(), String> {
    if line.len() != k {
        return Err(format!("line {line:?} has {} points, expected {k}", line.len()));
    }
    if let Some(p) = line.iter().find(|&&p| p >= v) {
        return Err(format!("point {p} out of range 0..{v}"));
    }
    let mut seen = HashSet::with_capacity(k);
    if !line.iter().all(|p| seen.insert(*p)) {
        return Err(format!("line {line:?} repeats a point"));
    }
    Ok(())
}

/// Per-pair line counts, stored as a dense lower-triangular array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCoverage {
    v: usize,
    counts: Vec<u8>,
}

#[inline]
fn tri_index(x: Point, y: Point) -> usize {
    let (lo, hi) = if x < y { (x, y) } else { (y, x) };
    hi * (hi - 1) / 2 + lo
}

impl PairCoverage {
    pub fn new(v: usize) -> Self {
        PairCoverage { v, counts: vec![0; v * v.saturating_sub(1) / 2] }
    }

    pub fn from_lines<L: AsRef<[Point]>>(v: usize, lines: &[L]) -> Self {
        let mut cov = Self::new(v);
        for line in lines {
            cov.add_line(line.as_ref());
        }
        cov
    }

    pub fn add_line(&mut self, line: &[Point]) {
        for (i, &x) in line.iter().enumerate() {
            for &y in &line[i + 1..] {
                let c = &mut self.counts[tri_index(x, y)];
                *c = c.saturating_add(1);
            }
        }
    }

    pub fn v(&self) -> usize {
        self.v
    }

    /// Lines through both `x` and `y`. Panics if `x == y` (the diagonal is undefined).
    pub fn get(&self, x: Point, y: Point) -> u8 {
        assert_ne!(x, y, "pair coverage is undefined on the diagonal");
        self.counts[tri_index(x, y)]
    }

    pub fn collinear(&self, x: Point, y: Point) -> bool {
        x == y || self.get(x, y) > 0
    }

    /// Pairs `(x, y)`, `x < y`, covered more than once.
    pub fn overcovered(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        (1..self.v).flat_map(move |y| (0..y).map(move |x| (x, y))).filter(|&(x, y)| self.get(x, y) > 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ViolationCode {
    PairCoveredTwice,
    WrongLineSize,
    IrregularPoint,
    ClaimedReplicationMismatch,
    OppositeNotALine,
    OppositeWrongSize,
}

impl ViolationCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationCode::PairCoveredTwice => "pair-covered-twice",
            ViolationCode::WrongLineSize => "wrong-line-size",
            ViolationCode::IrregularPoint => "irregular-point",
            ViolationCode::ClaimedReplicationMismatch => "claimed-replication-mismatch",
            ViolationCode::OppositeNotALine => "opposite-not-a-line",
            ViolationCode::OppositeWrongSize => "opposite-wrong-size",
        }
    }
}

/// One failed check, with the points and line indices that witness it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub code: ViolationCode,
    pub points: Vec<Point>,
    pub lines: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} points={:?}", self.code.as_str(), self.points)?;
        if !self.lines.is_empty() {
            write!(f, " lines={:?}", self.lines)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub is_pls: bool,
    pub is_uniform: bool,
    pub is_regular: bool,
    /// False when the design declares an `r` that disagrees with the computed profile.
    pub claim_consistent: bool,
    pub replication: Vec<usize>,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the partial-linear-space axioms plus uniformity and regularity.
/// Failures are reported, never returned as errors.
pub fn verify_pls(d: &Design) -> VerificationReport {
    let mut violations = Vec::new();
    let cov = d.pair_coverage();
    let mut is_pls = true;
    for (x, y) in cov.overcovered() {
        is_pls = false;
        let lines = d
            .lines()
            .iter()
            .enumerate()
            .filter(|(_, l)| l.contains(&x) && l.contains(&y))
            .map(|(i, _)| i)
            .collect();
        violations.push(Violation { code: ViolationCode::PairCoveredTwice, points: vec![x, y], lines });
    }

    let mut is_uniform = true;
    for (i, l) in d.lines().iter().enumerate() {
        if l.len() != d.k() {
            is_uniform = false;
            violations.push(Violation { code: ViolationCode::WrongLineSize, points: l.clone(), lines: vec![i] });
        }
    }

    let replication = d.replication();
    let typical = most_common(&replication);
    let mut is_regular = true;
    if let Some(r) = typical {
        for (p, &rp) in replication.iter().enumerate() {
            if rp != r {
                is_regular = false;
                violations.push(Violation { code: ViolationCode::IrregularPoint, points: vec![p], lines: vec![] });
            }
        }
    }

    let mut claim_consistent = true;
    if let Some(claimed) = d.r_claimed() {
        let bad: Vec<Point> = (0..d.v()).filter(|&p| replication[p] != claimed).collect();
        if !bad.is_empty() {
            claim_consistent = false;
            violations.push(Violation { code: ViolationCode::ClaimedReplicationMismatch, points: bad, lines: vec![] });
        }
    }

    VerificationReport { is_pls, is_uniform, is_regular, claim_consistent, replication, violations }
}

/// Most frequent value; ties go to the smallest.
fn most_common(values: &[usize]) -> Option<usize> {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    let mut best: Option<(usize, usize)> = None;
    for chunk in sorted.chunk_by(|a, b| a == b) {
        if best.is_none_or(|(_, n)| chunk.len() > n) {
            best = Some((chunk[0], chunk.len()));
        }
    }
    best.map(|(v, _)| v)
}

/// Point and line counts forced on a PENT(k, r).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Parameters {
    pub v: usize,
    /// `None` when `v * r` is not divisible by `k`.
    pub b: Option<usize>,
}

pub fn parameters(k: usize, r: usize) -> Parameters {
    let v = r * k - r + k + 1;
    let flags = v * r;
    Parameters { v, b: flags.is_multiple_of(k).then_some(flags / k) }
}

/// Necessary condition `k | r(r-1)`.
pub fn divisibility_ok(k: usize, r: usize) -> bool {
    (r * r.saturating_sub(1)).is_multiple_of(k)
}

pub fn parse_design(text: &str) -> Result<Design> {
    let mut header = Header::default();
    let mut raw_lines = Vec::new();
    for rec in format::records(text)? {
        match rec.key {
            "line" => raw_lines.push(rec),
            "kind" | "v" | "k" | "r" => header.set(rec)?,
            other => return Err(rec.error(format!("unknown key `{other}` in design file"))),
        }
    }
    let kind = header.expect_kind(&["pent", "pls", "raw"])?;
    let kind = DesignKind::parse(kind).expect("kind validated above");
    let v = header.required_usize("v")?;
    let k = header.required_usize("k")?;
    let r = header.optional_usize("r")?;
    if k < 2 {
        return Err(Error::parse(header.get("k").map_or(0, |r| r.line), format!("block size {k} < 2")));
    }

    let mut lines = Vec::with_capacity(raw_lines.len());
    let mut seen = HashSet::with_capacity(raw_lines.len());
    for rec in raw_lines {
        let mut pts = rec.usizes()?;
        check_line(v, k, &pts).map_err(|m| rec.error(m))?;
        pts.sort_unstable();
        if !seen.insert(pts.clone()) {
            return Err(Error::DuplicateLine(pts));
        }
        lines.push(pts);
    }
    Ok(Design::with_kind(v, k, kind, lines)?.with_claimed_r(r))
}

pub fn serialize_design(d: &Design) -> String {
    let mut out = String::new();
    writeln!(out, "kind: {}", d.kind().as_str()).unwrap();
    writeln!(out, "v: {}", d.v()).unwrap();
    writeln!(out, "k: {}", d.k()).unwrap();
    if let Some(r) = d.r_claimed() {
        writeln!(out, "r: {r}").unwrap();
    }
    for line in d.lines() {
        out.push_str("line:");
        for p in line {
            write!(out, " {p}").unwrap();
        }
        out.push('\n');
    }
    out
}
