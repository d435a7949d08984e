//! Integer lists on the command line and the flat `key = value` config file.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

/// Parses `3,5,7`, `5..13` (inclusive), `5..=13` or any comma-joined mix.
pub fn parse_list<T>(s: &str) -> Result<Vec<T>, String>
where
    T: FromStr + Copy + Ord + TryFrom<u64>,
    u64: From<T>,
{
    let num = |x: &str| x.trim().parse::<T>().map_err(|_| format!("not a number: {x:?}"));
    let mut out = Vec::new();
    for part in s.split(',').filter(|p| !p.trim().is_empty()) {
        match part.split_once("..") {
            Some((a, b)) => {
                let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
                if a > b {
                    return Err(format!("empty range {part:?}"));
                }
                for v in u64::from(a)..=u64::from(b) {
                    out.push(T::try_from(v).map_err(|_| format!("{v} out of range"))?);
                }
            }
            None => out.push(num(part)?),
        }
    }
    if out.is_empty() {
        return Err("empty list".into());
    }
    Ok(out)
}

pub fn parse_u64_list(s: &str) -> Result<Vec<u64>, String> {
    parse_list(s)
}

pub fn parse_u32_list(s: &str) -> Result<Vec<u32>, String> {
    parse_list(s)
}

/// Settings read from a config file. Lines are `key = value`; `#` starts a
/// comment; blank lines are ignored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConfigFile {
    pub values: BTreeMap<String, String>,
}

pub const CONFIG_KEYS: [&str; 8] = ["only", "q", "m", "budget", "samples", "seed", "jobs", "format"];

impl ConfigFile {
    pub fn parse(text: &str) -> Result<ConfigFile, String> {
        let mut values = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| format!("line {}: expected key = value", i + 1))?;
            let (k, v) = (k.trim(), v.trim());
            if !CONFIG_KEYS.contains(&k) {
                return Err(format!("line {}: unknown key {k:?}", i + 1));
            }
            if values.insert(k.to_string(), v.to_string()).is_some() {
                return Err(format!("line {}: duplicate key {k:?}", i + 1));
            }
        }
        Ok(ConfigFile { values })
    }

    pub fn load(path: &Path) -> Result<ConfigFile, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        ConfigFile::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    /// The value for `key` parsed with `parse`, if present.
    pub fn get<T>(&self, key: &str, parse: impl Fn(&str) -> Result<T, String>) -> Result<Option<T>, String> {
        self.values
            .get(key)
            .map(|v| parse(v).map_err(|e| format!("config key {key}: {e}")))
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists_and_ranges() {
        assert_eq!(parse_u64_list("5..13").unwrap(), (5..=13).collect::<Vec<_>>());
        assert_eq!(parse_u64_list("2..=4,9").unwrap(), vec![2, 3, 4, 9]);
        assert_eq!(parse_u32_list("3, 5").unwrap(), vec![3, 5]);
        assert!(parse_u64_list("9..3").is_err());
        assert!(parse_u64_list("x").is_err());
        assert!(parse_u64_list("").is_err());
    }

    #[test]
    fn config_file() {
        let c = ConfigFile::parse("# sweep\nonly = leaders-m3\nq = 5..7  # trailing\n\nbudget=1000\n").unwrap();
        assert_eq!(c.get("q", parse_u64_list).unwrap(), Some(vec![5, 6, 7]));
        assert_eq!(c.get("budget", |s| s.parse::<u64>().map_err(|e| e.to_string())).unwrap(), Some(1000));
        assert_eq!(c.get("m", parse_u32_list).unwrap(), None);
        assert!(ConfigFile::parse("colour = red").is_err());
        assert!(ConfigFile::parse("q").is_err());
        assert!(ConfigFile::parse("q=3\nq=4").is_err());
    }
}
