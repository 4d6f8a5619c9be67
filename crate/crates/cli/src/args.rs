//! Minimal flag parser with strict unknown-flag rejection, so usage errors
//! map cleanly to exit code 64.

use std::collections::{HashMap, HashSet};

pub struct ArgSpec {
    /// Flags that take a value (`--flag value`).
    pub value_flags: &'static [&'static str],
    /// Boolean switches.
    pub switch_flags: &'static [&'static str],
}

#[derive(Debug, Default)]
pub struct Parsed {
    pub positional: Vec<String>,
    values: HashMap<String, String>,
    switches: HashSet<String>,
}

impl Parsed {
    pub fn value(&self, flag: &str) -> Option<&str> {
        self.values.get(flag).map(String::as_str)
    }

    pub fn switch(&self, flag: &str) -> bool {
        self.switches.contains(flag)
    }
}

pub fn parse(tokens: &[String], spec: &ArgSpec) -> Result<Parsed, String> {
    let mut parsed = Parsed::default();
    let mut iter = tokens.iter();
    while let Some(token) = iter.next() {
        if let Some(_flag) = token.strip_prefix('-') {
            if spec.value_flags.contains(&token.as_str()) {
                let value = iter
                    .next()
                    .ok_or_else(|| format!("flag {token} expects a value"))?;
                parsed.values.insert(token.clone(), value.clone());
            } else if spec.switch_flags.contains(&token.as_str()) {
                parsed.switches.insert(token.clone());
            } else {
                return Err(format!("unknown flag {token}"));
            }
        } else {
            parsed.positional.push(token.clone());
        }
    }
    Ok(parsed)
}
