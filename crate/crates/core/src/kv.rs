//! Flat `key=value` text files: one pair per line, `#` starts a comment.
//! Keys keep their insertion order when written back out.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KvMap {
    pairs: Vec<(String, String)>,
}

impl KvMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// Sets `key`, replacing an earlier value in place.
    pub fn insert(&mut self, key: &str, value: impl fmt::Display) {
        let value = value.to_string();
        match self.pairs.iter_mut().find(|(k, _)| k == key) {
            Some(slot) => slot.1 = value,
            None => self.pairs.push((key.to_string(), value)),
        }
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.pairs
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn get_parsed<T>(&self, key: &str) -> Result<Option<T>>
    where
        T: FromStr,
        T::Err: fmt::Display,
    {
        self.get(key)
            .map(|v| {
                v.parse::<T>()
                    .map_err(|e| Error::Config(format!("bad value for {key}: {v:?} ({e})")))
            })
            .transpose()
    }

    pub fn require<T>(&self, key: &str) -> Result<T>
    where
        T: FromStr,
        T::Err: fmt::Display,
    {
        self.get_parsed(key)?
            .ok_or_else(|| Error::Config(format!("missing key {key}")))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.pairs.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

impl fmt::Display for KvMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.pairs {
            writeln!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

impl FromStr for KvMap {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut map = KvMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key=value", lineno + 1)))?;
            let k = k.trim();
            if k.is_empty() {
                return Err(Error::Config(format!("line {}: empty key", lineno + 1)));
            }
            if map.get(k).is_some() {
                return Err(Error::Config(format!(
                    "line {}: duplicate key {k}",
                    lineno + 1
                )));
            }
            map.insert(k, v.trim());
        }
        Ok(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_write() {
        let map: KvMap = "# run\na=1\n\nb = two words\nc=x=y\n".parse().unwrap();
        assert_eq!(map.get("b"), Some("two words"));
        assert_eq!(map.get("c"), Some("x=y"));
        assert_eq!(map.require::<u32>("a").unwrap(), 1);
        assert!(map.require::<u32>("b").is_err());
        assert!(map.require::<u32>("zz").is_err());
        assert_eq!(map.to_string(), "a=1\nb=two words\nc=x=y\n");
    }

    #[test]
    fn rejects_bad_lines() {
        assert!("novalue\n".parse::<KvMap>().is_err());
        assert!("=1\n".parse::<KvMap>().is_err());
        assert!("a=1\na=2\n".parse::<KvMap>().is_err());
    }
}
