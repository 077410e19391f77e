use std::fmt::Write as _;

use pentforge::Error;

pub const EXIT_INVALID: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;
pub const EXIT_PRECONDITION: u8 = 4;

/// Human-readable lines followed by a `key: value` block.
#[derive(Debug, Default)]
pub struct Report {
    pub exit: u8,
    pub lines: Vec<String>,
    pub machine: Vec<(&'static str, String)>,
    /// Printed verbatim instead of the report, e.g. a design written to stdout.
    pub raw: Option<String>,
}

impl Report {
    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn key(&mut self, key: &'static str, value: impl ToString) {
        self.machine.push((key, value.to_string()));
    }

    pub fn render(&self) -> String {
        if let Some(raw) = &self.raw {
            return raw.clone();
        }
        let mut out = String::new();
        for l in &self.lines {
            writeln!(out, "{l}").unwrap();
        }
        if !self.lines.is_empty() {
            out.push('\n');
        }
        for (k, v) in &self.machine {
            writeln!(out, "{k}: {v}").unwrap();
        }
        out
    }
}

#[derive(Debug)]
pub struct CliError {
    pub exit: u8,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError { exit: EXIT_INPUT, message: message.into() }
    }

    pub fn precondition(message: impl Into<String>) -> Self {
        CliError { exit: EXIT_PRECONDITION, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let exit = match e {
            Error::Parse { .. } | Error::Io { .. } | Error::UnknownEntry(_) => EXIT_INPUT,
            Error::DuplicateLine(_) | Error::Invalid { .. } | Error::CountMismatch { .. } => EXIT_INVALID,
            Error::Precondition(_) => EXIT_PRECONDITION,
            Error::BudgetExhausted { .. } => EXIT_BUDGET,
        };
        CliError { exit, message: e.to_string() }
    }
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
