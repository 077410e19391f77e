use std::collections::HashSet;
use std::fmt::Write as _;

use crate::design::{Design, Line};
use crate::error::{Error, Result};
use crate::format::{self, Header};

/// Base blocks developed under a cyclic translation.
///
/// Points are `family * modulus + j` for `family < families`, `j < modulus`; the
/// translation adds `step` to `j` modulo `modulus` and leaves the family alone.
/// With one family this is plain development in `Z_modulus`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSpec {
    pub modulus: usize,
    pub step: usize,
    pub families: usize,
    pub k: usize,
    pub r: Option<usize>,
    pub expected_lines: Option<usize>,
    pub bases: Vec<Line>,
}

impl OrbitSpec {
    pub fn new(modulus: usize, step: usize, k: usize, bases: Vec<Line>) -> Result<Self> {
        let spec = OrbitSpec { modulus, step, families: 1, k, r: None, expected_lines: None, bases };
        spec.validate()?;
        Ok(spec)
    }

    pub fn v(&self) -> usize {
        self.modulus * self.families
    }

    pub fn orbit_length(&self) -> usize {
        self.modulus / self.step
    }

    pub fn validate(&self) -> Result<()> {
        if self.step == 0 || self.modulus == 0 || !self.modulus.is_multiple_of(self.step) {
            return Err(Error::invalid("orbit spec", format!("step {} must divide modulus {}", self.step, self.modulus)));
        }
        if self.families == 0 {
            return Err(Error::invalid("orbit spec", "families must be positive"));
        }
        if self.k < 2 {
            return Err(Error::invalid("orbit spec", format!("block size {} < 2", self.k)));
        }
        for base in &self.bases {
            if base.len() != self.k {
                return Err(Error::invalid("orbit spec", format!("base {base:?} does not have {} points", self.k)));
            }
            if base.iter().any(|&p| p >= self.v()) {
                return Err(Error::invalid("orbit spec", format!("base {base:?} leaves 0..{}", self.v())));
            }
            let distinct: HashSet<_> = base.iter().collect();
            if distinct.len() != base.len() {
                return Err(Error::invalid("orbit spec", format!("base {base:?} repeats a point")));
            }
        }
        Ok(())
    }

    fn translate(&self, p: usize, shift: usize) -> usize {
        let (family, j) = (p / self.modulus, p % self.modulus);
        family * self.modulus + (j + shift) % self.modulus
    }
}

/// Develops every base block through its full orbit. A repeated line, inside one
/// orbit or across orbits, is an error.
pub fn expand_orbits(spec: &OrbitSpec) -> Result<Design> {
    spec.validate()?;
    let mut seen = HashSet::new();
    let mut lines = Vec::with_capacity(spec.bases.len() * spec.orbit_length());
    for base in &spec.bases {
        for t in 0..spec.orbit_length() {
            let mut line: Line = base.iter().map(|&p| spec.translate(p, t * spec.step)).collect();
            line.sort_unstable();
            if !seen.insert(line.clone()) {
                return Err(Error::DuplicateLine(line));
            }
            lines.push(line);
        }
    }
    if let Some(expected) = spec.expected_lines {
        if expected != lines.len() {
            return Err(Error::CountMismatch { expected, actual: lines.len() });
        }
    }
    Ok(Design::new(spec.v(), spec.k, lines)?.with_claimed_r(spec.r))
}

pub fn parse_orbit(text: &str) -> Result<OrbitSpec> {
    let mut header = Header::default();
    let mut bases = Vec::new();
    for rec in format::records(text)? {
        match rec.key {
            "base" => bases.push(rec.usizes()?),
            "kind" | "modulus" | "step" | "k" | "r" | "lines" | "families" => header.set(rec)?,
            other => return Err(rec.error(format!("unknown key `{other}` in orbit file"))),
        }
    }
    header.expect_kind(&["orbit"])?;
    let spec = OrbitSpec {
        modulus: header.required_usize("modulus")?,
        step: header.required_usize("step")?,
        families: header.optional_usize("families")?.unwrap_or(1),
        k: header.required_usize("k")?,
        r: header.optional_usize("r")?,
        expected_lines: header.optional_usize("lines")?,
        bases,
    };
    spec.validate().map_err(|e| Error::parse(0, e.to_string()))?;
    Ok(spec)
}

pub fn serialize_orbit(spec: &OrbitSpec) -> String {
    let mut out = String::from("kind: orbit\n");
    if spec.families != 1 {
        writeln!(out, "families: {}", spec.families).unwrap();
    }
    writeln!(out, "modulus: {}\nstep: {}\nk: {}", spec.modulus, spec.step, spec.k).unwrap();
    if let Some(r) = spec.r {
        writeln!(out, "r: {r}").unwrap();
    }
    if let Some(n) = spec.expected_lines {
        writeln!(out, "lines: {n}").unwrap();
    }
    for base in &spec.bases {
        let pts: Vec<String> = base.iter().map(|p| p.to_string()).collect();
        writeln!(out, "base: {}", pts.join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_orbit() {
        let spec = OrbitSpec::new(3, 3, 3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(expand_orbits(&spec).unwrap().lines(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn fano_plane_from_difference_set() {
        let spec = OrbitSpec::new(7, 1, 3, vec![vec![0, 1, 3]]).unwrap();
        let d = expand_orbits(&spec).unwrap();
        assert_eq!(d.b(), 7);
        assert!(d.pair_coverage().overcovered().next().is_none());
    }

    #[test]
    fn short_orbit_is_rejected() {
        // {0, 3} + 3 = {3, 0} in Z_6
        let spec = OrbitSpec::new(6, 1, 2, vec![vec![0, 3]]).unwrap();
        assert_eq!(expand_orbits(&spec).unwrap_err(), Error::DuplicateLine(vec![0, 3]));
    }

    #[test]
    fn duplicate_across_orbits_is_rejected() {
        let spec = OrbitSpec::new(7, 1, 3, vec![vec![0, 1, 3], vec![1, 2, 4]]).unwrap();
        assert!(matches!(expand_orbits(&spec), Err(Error::DuplicateLine(_))));
    }

    #[test]
    fn count_mismatch() {
        let mut spec = OrbitSpec::new(7, 1, 3, vec![vec![0, 1, 3]]).unwrap();
        spec.expected_lines = Some(8);
        assert_eq!(expand_orbits(&spec).unwrap_err(), Error::CountMismatch { expected: 8, actual: 7 });
    }

    #[test]
    fn families_translate_independently() {
        let spec = OrbitSpec { modulus: 5, step: 1, families: 2, k: 2, r: None, expected_lines: None, bases: vec![vec![0, 5]] };
        let d = expand_orbits(&spec).unwrap();
        assert_eq!(d.lines(), &[vec![0, 5], vec![1, 6], vec![2, 7], vec![3, 8], vec![4, 9]]);
    }

    #[test]
    fn invalid_specs() {
        assert!(OrbitSpec::new(7, 2, 3, vec![]).is_err());
        assert!(OrbitSpec::new(7, 1, 3, vec![vec![0, 1]]).is_err());
        assert!(OrbitSpec::new(7, 1, 3, vec![vec![0, 1, 7]]).is_err());
        assert!(OrbitSpec::new(7, 1, 3, vec![vec![0, 1, 1]]).is_err());
        assert!(parse_orbit("kind: orbit\nmodulus: 6\nstep: 4\nk: 3\n").is_err());
    }

    #[test]
    fn file_round_trip() {
        let text = "kind: orbit\nfamilies: 2\nmodulus: 17\nstep: 1\nk: 3\nr: 15\nlines: 170\nbase: 0 3 8\n";
        let spec = parse_orbit(text).unwrap();
        assert_eq!(spec.families, 2);
        assert_eq!(serialize_orbit(&spec), text);
    }
}
