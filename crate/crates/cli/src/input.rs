//! Command-line inputs: inline ideals, ideal files and complex files.

use std::path::Path;

use anyhow::{bail, Context, Result};
use scarf_core::{parse_ideal, parse_ideal_json, LabeledComplex, MonomialIdeal, Permutation};

pub enum Input {
    Ideal(MonomialIdeal),
    Complex(LabeledComplex),
}

impl Input {
    /// Reads `arg` as a file if one exists at that path, otherwise parses it
    /// as an inline ideal. File contents may be a complex JSON, an ideal JSON
    /// or ideal text.
    pub fn load(arg: &str) -> Result<Self> {
        let path = Path::new(arg);
        if !path.is_file() {
            return Ok(Input::Ideal(
                parse_ideal(arg).with_context(|| format!("cannot parse ideal {arg:?}"))?,
            ));
        }
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read {}", path.display()))?;
        if text.trim_start().starts_with('{') {
            let value: serde_json::Value = serde_json::from_str(&text)
                .with_context(|| format!("{} is not valid JSON", path.display()))?;
            if value.get("cells").is_some() {
                let complex = LabeledComplex::from_json(&text)
                    .with_context(|| format!("invalid complex in {}", path.display()))?;
                return Ok(Input::Complex(complex));
            }
            let ideal = parse_ideal_json(&text)
                .with_context(|| format!("invalid ideal in {}", path.display()))?;
            return Ok(Input::Ideal(ideal));
        }
        Ok(Input::Ideal(parse_ideal(text.trim()).with_context(
            || format!("cannot parse ideal in {}", path.display()),
        )?))
    }

    pub fn ideal(&self) -> Result<MonomialIdeal> {
        match self {
            Input::Ideal(m) => Ok(m.clone()),
            Input::Complex(x) => Ok(x.ideal()?),
        }
    }

    pub fn require_ideal(self, command: &str) -> Result<MonomialIdeal> {
        match self {
            Input::Ideal(m) => Ok(m),
            Input::Complex(_) => bail!("`{command}` takes an ideal, not a complex file"),
        }
    }
}

/// Expands `--sigma` values: each is a permutation or `all`; no values
/// means all permutations.
pub fn sigmas(values: &[String], n: usize) -> Result<Vec<Permutation>> {
    if values.is_empty() || values.iter().any(|v| v.trim() == "all") {
        return Ok(Permutation::all(n).collect());
    }
    values
        .iter()
        .map(|v| {
            let p: Permutation = v.parse()?;
            if p.len() != n {
                bail!("permutation {p} has length {}, expected {n}", p.len());
            }
            Ok(p)
        })
        .collect()
}
