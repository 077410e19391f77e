//! The bundled corpus of explicit geometries with their expected statistics.
//!
//! Files are compiled in. Setting `PENTFORGE_CATALOG` to a directory with the
//! same layout (a `manifest.txt` plus the files it names) reads from disk instead.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::analysis::{count_olps, invariant_violations, verify_pentagonal};
use crate::constructors::{expand_orbits, parse_orbit, parse_pbd, parse_sts, Pbd, Sts};
use crate::design::{parse_design, Design, Line};
use crate::error::{Error, Result};
use crate::format::{self, Record};
use crate::graph::{build_deficiency, girth, is_connected};

pub const CATALOG_ENV: &str = "PENTFORGE_CATALOG";

macro_rules! bundled {
    ($($path:literal),* $(,)?) => {
        &[$(($path, include_str!(concat!("../catalog/", $path)))),*]
    };
}

static BUNDLED: &[(&str, &str)] = bundled!(
    "manifest.txt",
    "pent3_10.design",
    "pent3_10_olp1.design",
    "pent3_12.orbit",
    "pent3_12_olp1.design",
    "pent3_15.orbit",
    "pent3_16.orbit",
    "pent3_19.orbit",
    "pent3_21.orbit",
    "pent3_22.design",
    "pent3_24.orbit",
    "pent3_25.orbit",
    "pent3_27.orbit",
    "pent3_9_olp0.design",
    "pent3_9_olp1.design",
    "pent4_13.orbit",
    "pent4_20.orbit",
    "pent4_21.orbit",
    "pent4_24.orbit",
    "pent4_29.orbit",
    "pent4_37.orbit",
    "pent4_40.orbit",
    "pent4_52.orbit",
    "pent4_60.orbit",
    "support/pbd11.pbd",
    "support/pbd17.pbd",
    "support/sts13.sts",
    "support/sts7.sts",
);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedStats {
    pub v: usize,
    pub b: usize,
    pub k: usize,
    pub r: usize,
    pub olp_count: usize,
    pub girth: Option<usize>,
    pub connected: Option<bool>,
    /// A named opposite line pair.
    pub olp: Option<(Line, Line)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: String,
    pub path: String,
    pub source: String,
    pub expected: ExpectedStats,
    pub sha256: String,
}

/// An ingredient file (triple system or PBD) used by the constructors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportEntry {
    pub id: String,
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Clone)]
enum Store {
    Bundled,
    Dir(PathBuf),
}

#[derive(Debug, Clone)]
pub struct Catalog {
    store: Store,
    entries: Vec<CatalogEntry>,
    support: Vec<SupportEntry>,
}

/// Statistics measured on a loaded entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObservedStats {
    pub v: usize,
    pub b: usize,
    pub k: usize,
    pub r: Option<usize>,
    pub olp_count: usize,
    pub girth: Option<usize>,
    pub connected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryReport {
    pub id: String,
    pub observed: Option<ObservedStats>,
    pub failures: Vec<String>,
}

impl EntryReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogReport {
    /// Sorted by id.
    pub entries: Vec<EntryReport>,
}

impl CatalogReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(EntryReport::passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &EntryReport> {
        self.entries.iter().filter(|e| !e.passed())
    }
}

impl Catalog {
    pub fn bundled() -> Self {
        Self::from_manifest(Store::Bundled).expect("bundled manifest parses")
    }

    pub fn from_dir(dir: impl AsRef<Path>) -> Result<Self> {
        Self::from_manifest(Store::Dir(dir.as_ref().to_path_buf()))
    }

    /// The directory named by `PENTFORGE_CATALOG` if set, else the bundled files.
    pub fn open() -> Result<Self> {
        match std::env::var_os(CATALOG_ENV) {
            Some(dir) if !dir.is_empty() => Self::from_dir(dir),
            _ => Ok(Self::bundled()),
        }
    }

    fn from_manifest(store: Store) -> Result<Self> {
        let text = read(&store, "manifest.txt")?;
        let (entries, support) = parse_manifest(&text)?;
        Ok(Catalog { store, entries, support })
    }

    /// Entries sorted by id.
    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn support_entries(&self) -> &[SupportEntry] {
        &self.support
    }

    pub fn entry(&self, id: &str) -> Result<&CatalogEntry> {
        self.entries.iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownEntry(id.to_string()))
    }

    /// Raw text of a file in the catalog, by relative path.
    pub fn text(&self, path: &str) -> Result<String> {
        read(&self.store, path)
    }

    /// Parsed design, orbit-expanded where the payload is an orbit file.
    pub fn load(&self, id: &str) -> Result<Design> {
        let entry = self.entry(id)?;
        load_payload(&entry.path, &self.text(&entry.path)?)
    }

    fn support_text(&self, id: &str) -> Result<String> {
        let entry = self.support.iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownEntry(id.to_string()))?;
        self.text(&entry.path)
    }

    pub fn load_sts(&self, id: &str) -> Result<Sts> {
        parse_sts(&self.support_text(id)?)
    }

    pub fn load_pbd(&self, id: &str) -> Result<Pbd> {
        parse_pbd(&self.support_text(id)?)
    }

    pub fn verify_entry(&self, entry: &CatalogEntry) -> EntryReport {
        let mut failures = Vec::new();
        let text = match self.text(&entry.path) {
            Ok(t) => t,
            Err(e) => return EntryReport { id: entry.id.clone(), observed: None, failures: vec![e.to_string()] },
        };
        let hash = sha256_hex(&text);
        if hash != entry.sha256 {
            failures.push(format!("content hash {hash} differs from manifest"));
        }
        let d = match load_payload(&entry.path, &text) {
            Ok(d) => d,
            Err(e) => {
                failures.push(e.to_string());
                return EntryReport { id: entry.id.clone(), observed: None, failures };
            }
        };
        let report = verify_pentagonal(&d);
        if !report.pentagonal {
            match report.all_violations().next() {
                Some(v) => failures.push(format!("not pentagonal: {v}")),
                None => failures.push("not pentagonal: parameters inconsistent".to_string()),
            }
        }
        let olps = count_olps(&d);
        let g = build_deficiency(&d);
        let observed = ObservedStats {
            v: d.v(),
            b: d.b(),
            k: d.k(),
            r: report.r,
            olp_count: olps.q(),
            girth: girth(&g),
            connected: is_connected(&g),
        };
        let exp = &entry.expected;
        let mut compare = |name: &str, want: String, got: String| {
            if want != got {
                failures.push(format!("{name}: expected {want}, found {got}"));
            }
        };
        compare("v", exp.v.to_string(), observed.v.to_string());
        compare("b", exp.b.to_string(), observed.b.to_string());
        compare("k", exp.k.to_string(), observed.k.to_string());
        compare("r", exp.r.to_string(), observed.r.map_or("irregular".into(), |r| r.to_string()));
        compare("olp_count", exp.olp_count.to_string(), observed.olp_count.to_string());
        if let Some(want) = exp.girth {
            compare("girth", want.to_string(), observed.girth.map_or("none".into(), |x| x.to_string()));
        }
        if let Some(want) = exp.connected {
            compare("connected", want.to_string(), observed.connected.to_string());
        }
        if let Some((a, b)) = &exp.olp {
            let named = olps.lines(&d).any(|(l, m)| (l == a && m == b) || (l == b && m == a));
            if !named {
                failures.push(format!("no opposite line pair {a:?} / {b:?}"));
            }
        }
        if report.pentagonal {
            failures.extend(invariant_violations(&d));
        }
        EntryReport { id: entry.id.clone(), observed: Some(observed), failures }
    }

    /// Verifies every entry concurrently; rows come back sorted by id.
    pub fn verify_all(&self) -> CatalogReport {
        let mut entries: Vec<EntryReport> = self.entries.par_iter().map(|e| self.verify_entry(e)).collect();
        entries.sort_by(|a, b| a.id.cmp(&b.id));
        CatalogReport { entries }
    }
}

pub fn catalog_load(id: &str) -> Result<Design> {
    Catalog::open()?.load(id)
}

pub fn catalog_list() -> Result<Vec<CatalogEntry>> {
    Ok(Catalog::open()?.entries)
}

pub fn catalog_verify_all() -> Result<CatalogReport> {
    Ok(Catalog::open()?.verify_all())
}

pub fn sha256_hex(text: &str) -> String {
    let digest = Sha256::digest(text.as_bytes());
    let mut out = String::with_capacity(64);
    for byte in digest {
        write!(out, "{byte:02x}").unwrap();
    }
    out
}

fn read(store: &Store, path: &str) -> Result<String> {
    match store {
        Store::Bundled => BUNDLED
            .iter()
            .find(|(p, _)| *p == path)
            .map(|(_, text)| text.to_string())
            .ok_or_else(|| Error::Io { path: path.to_string(), message: "not in the bundled catalog".into() }),
        Store::Dir(dir) => {
            let full = dir.join(path);
            std::fs::read_to_string(&full)
                .map_err(|e| Error::Io { path: full.display().to_string(), message: e.to_string() })
        }
    }
}

fn load_payload(path: &str, text: &str) -> Result<Design> {
    if path.ends_with(".orbit") {
        expand_orbits(&parse_orbit(text)?)
    } else {
        parse_design(text)
    }
}

#[derive(Default)]
struct Block<'a> {
    start: Option<Record<'a>>,
    fields: Vec<Record<'a>>,
}

impl<'a> Block<'a> {
    fn get(&self, key: &str) -> Option<&Record<'a>> {
        self.fields.iter().find(|r| r.key == key)
    }

    fn required(&self, key: &str) -> Result<&Record<'a>> {
        let start = self.start.as_ref().expect("block has a start record");
        self.get(key).ok_or_else(|| start.error(format!("`{}` is missing `{key}:`", start.value)))
    }
}

fn parse_manifest(text: &str) -> Result<(Vec<CatalogEntry>, Vec<SupportEntry>)> {
    let mut blocks: Vec<Block> = Vec::new();
    for rec in format::records(text)? {
        match rec.key {
            "entry" | "support" => blocks.push(Block { start: Some(rec), fields: Vec::new() }),
            "path" | "source" | "v" | "b" | "k" | "r" | "olp_count" | "girth" | "connected" | "olp" | "sha256" => {
                let block = blocks.last_mut().ok_or_else(|| rec.error("field before the first `entry:`"))?;
                if block.get(rec.key).is_some() {
                    return Err(rec.error(format!("repeated `{}`", rec.key)));
                }
                block.fields.push(rec);
            }
            other => return Err(rec.error(format!("unknown key `{other}` in manifest"))),
        }
    }
    let mut entries = Vec::new();
    let mut support = Vec::new();
    for block in &blocks {
        let start = block.start.as_ref().expect("block has a start record");
        let id = start.value.to_string();
        let path = block.required("path")?.value.to_string();
        let sha256 = block.required("sha256")?.value.to_ascii_lowercase();
        if start.key == "support" {
            support.push(SupportEntry { id, path, sha256 });
            continue;
        }
        let connected = match block.get("connected") {
            None => None,
            Some(rec) => match rec.value {
                "true" => Some(true),
                "false" => Some(false),
                other => return Err(rec.error(format!("`connected` expects true or false, got `{other}`"))),
            },
        };
        let olp = match block.get("olp") {
            None => None,
            Some(rec) => {
                let (a, b) = rec.value.split_once('/').ok_or_else(|| rec.error("`olp` expects `<line> / <line>`"))?;
                let parse = |s: &str| -> Result<Line> {
                    let mut line = s
                        .split_whitespace()
                        .map(|t| t.parse().map_err(|_| rec.error(format!("bad point `{t}`"))))
                        .collect::<Result<Line>>()?;
                    line.sort_unstable();
                    Ok(line)
                };
                Some((parse(a)?, parse(b)?))
            }
        };
        let expected = ExpectedStats {
            v: block.required("v")?.usize()?,
            b: block.required("b")?.usize()?,
            k: block.required("k")?.usize()?,
            r: block.required("r")?.usize()?,
            olp_count: block.required("olp_count")?.usize()?,
            girth: block.get("girth").map(|r| r.usize()).transpose()?,
            connected,
            olp,
        };
        if expected.k == 0 || expected.b * expected.k != expected.v * expected.r {
            return Err(start.error(format!("`{id}`: expected stats violate bk = vr")));
        }
        let source = block.get("source").map_or(String::new(), |r| r.value.to_string());
        entries.push(CatalogEntry { id, path, source, expected, sha256 });
    }
    entries.sort_by(|a, b| a.id.cmp(&b.id));
    if let Some(w) = entries.windows(2).find(|w| w[0].id == w[1].id) {
        return Err(Error::parse(0, format!("duplicate catalog id `{}`", w[0].id)));
    }
    support.sort_by(|a, b| a.id.cmp(&b.id));
    Ok((entries, support))
}
