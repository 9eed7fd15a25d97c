//! Single-line `key=value` records, the machine-readable output format.
//!
//! Fields are separated by single spaces. A value containing a space, a
//! quote or a backslash, or an empty value, is written in double quotes
//! with `\"` and `\\` escapes.

use std::fmt;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Record {
    fields: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum RecordError {
    #[error("field {0:?} has no '='")]
    MissingEquals(String),
    #[error("unterminated quoted value for {0}")]
    Unterminated(String),
}

impl Record {
    pub fn new() -> Self {
        Record::default()
    }

    pub fn with(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.push(key, value);
        self
    }

    pub fn push(&mut self, key: &str, value: impl fmt::Display) {
        self.fields.push((key.to_string(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn fields(&self) -> &[(String, String)] {
        &self.fields
    }

    pub fn parse(line: &str) -> Result<Self, RecordError> {
        let mut fields = Vec::new();
        let mut rest = line.trim();
        while !rest.is_empty() {
            let eq = rest.find('=').ok_or_else(|| RecordError::MissingEquals(rest.to_string()))?;
            let key = rest[..eq].to_string();
            if key.contains(' ') {
                return Err(RecordError::MissingEquals(key));
            }
            rest = &rest[eq + 1..];
            let value;
            if let Some(quoted) = rest.strip_prefix('"') {
                let mut out = String::new();
                let mut chars = quoted.char_indices();
                let mut end = None;
                while let Some((i, c)) = chars.next() {
                    match c {
                        '\\' => out.extend(chars.next().map(|(_, c)| c)),
                        '"' => {
                            end = Some(i + 1);
                            break;
                        }
                        _ => out.push(c),
                    }
                }
                let end = end.ok_or_else(|| RecordError::Unterminated(key.clone()))?;
                value = out;
                rest = &quoted[end..];
            } else {
                let end = rest.find(' ').unwrap_or(rest.len());
                value = rest[..end].to_string();
                rest = &rest[end..];
            }
            fields.push((key, value));
            rest = rest.trim_start();
        }
        Ok(Record { fields })
    }
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.fields.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{k}=")?;
            if v.is_empty() || v.contains([' ', '"', '\\']) {
                f.write_str("\"")?;
                for c in v.chars() {
                    if c == '"' || c == '\\' {
                        f.write_str("\\")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str("\"")?;
            } else {
                f.write_str(v)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let r = Record::new()
            .with("mosaic", "21/34")
            .with("bracket", "-A^3 + A^-5")
            .with("odd", "say \"hi\" \\ bye")
            .with("empty", "");
        let line = r.to_string();
        assert_eq!(line.lines().count(), 1);
        assert_eq!(Record::parse(&line).unwrap(), r);
        assert_eq!(r.get("mosaic"), Some("21/34"));
    }

    #[test]
    fn malformed() {
        assert!(matches!(Record::parse("a=1 b"), Err(RecordError::MissingEquals(_))));
        assert!(matches!(Record::parse("a=\"open"), Err(RecordError::Unterminated(_))));
    }
}
