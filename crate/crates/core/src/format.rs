//! Shared reader for the line-oriented `key: value` file formats.
//!
//! Every bundled format (designs, orbits, graphs, GDDs, triple systems,
//! PBDs, the catalog manifest) is one record per physical line, with `#`
//! starting a comment. Keys are lowercase.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record<'a> {
    pub line: usize,
    pub key: &'a str,
    pub value: &'a str,
}

pub fn records(text: &str) -> Result<Vec<Record<'_>>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once(':')
            .ok_or_else(|| Error::parse(line, format!("expected `key: value`, got `{content}`")))?;
        let key = key.trim();
        if key.is_empty() || key.chars().any(|c| c.is_ascii_uppercase() || c.is_whitespace()) {
            return Err(Error::parse(line, format!("bad key `{key}`")));
        }
        out.push(Record { line, key, value: value.trim() });
    }
    Ok(out)
}

impl Record<'_> {
    pub fn usize(&self) -> Result<usize> {
        self.value
            .parse()
            .map_err(|_| Error::parse(self.line, format!("`{}` expects an integer, got `{}`", self.key, self.value)))
    }

    pub fn usizes(&self) -> Result<Vec<usize>> {
        self.value
            .split_whitespace()
            .map(|tok| {
                tok.parse()
                    .map_err(|_| Error::parse(self.line, format!("`{}`: bad integer `{tok}`", self.key)))
            })
            .collect()
    }

    pub fn error(&self, message: impl Into<String>) -> Error {
        Error::parse(self.line, message)
    }
}

/// Header fields that must appear at most once.
#[derive(Debug, Default)]
pub struct Header<'a> {
    fields: Vec<Record<'a>>,
}

impl<'a> Header<'a> {
    pub fn set(&mut self, rec: Record<'a>) -> Result<()> {
        if self.fields.iter().any(|r| r.key == rec.key) {
            return Err(rec.error(format!("repeated header key `{}`", rec.key)));
        }
        self.fields.push(rec);
        Ok(())
    }

    pub fn get(&self, key: &str) -> Option<&Record<'a>> {
        self.fields.iter().find(|r| r.key == key)
    }

    pub fn required_usize(&self, key: &str) -> Result<usize> {
        self.get(key)
            .ok_or_else(|| Error::parse(0, format!("missing `{key}:` header")))?
            .usize()
    }

    pub fn optional_usize(&self, key: &str) -> Result<Option<usize>> {
        self.get(key).map(|r| r.usize()).transpose()
    }

    pub fn expect_kind(&self, kinds: &[&str]) -> Result<&'a str> {
        let rec = self.get("kind").ok_or_else(|| Error::parse(0, "missing `kind:` header"))?;
        if kinds.contains(&rec.value) {
            Ok(rec.value)
        } else {
            Err(rec.error(format!("kind `{}` not one of {kinds:?}", rec.value)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let recs = records("# header\n\nv: 6   # six points\nline: 0 1 2\n").unwrap();
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[0].key, "v");
        assert_eq!(recs[0].usize().unwrap(), 6);
        assert_eq!(recs[1].usizes().unwrap(), vec![0, 1, 2]);
        assert_eq!(recs[1].line, 4);
    }

    #[test]
    fn missing_colon_is_reported_with_line_number() {
        let err = records("v: 3\nline 0 1 2\n").unwrap_err();
        assert_eq!(err, Error::parse(2, "expected `key: value`, got `line 0 1 2`"));
    }

    #[test]
    fn uppercase_keys_rejected() {
        assert!(records("V: 3").is_err());
    }
}
