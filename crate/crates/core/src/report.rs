//! Ordered key/value verification records.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Entry {
    Value { key: String, value: String },
    Check { key: String, passed: bool, detail: String },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    entries: Vec<Entry>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            entries: Vec::new(),
        }
    }

    pub fn value(&mut self, key: impl Into<String>, value: impl fmt::Display) -> &mut Self {
        self.entries.push(Entry::Value {
            key: key.into(),
            value: value.to_string(),
        });
        self
    }

    pub fn check(&mut self, key: impl Into<String>, passed: bool, detail: impl Into<String>) -> &mut Self {
        self.entries.push(Entry::Check {
            key: key.into(),
            passed,
            detail: detail.into(),
        });
        self
    }

    /// Appends all entries of `other`, prefixing their keys.
    pub fn absorb(&mut self, prefix: &str, other: &Report) {
        for e in &other.entries {
            self.entries.push(match e {
                Entry::Value { key, value } => Entry::Value {
                    key: format!("{prefix}.{key}"),
                    value: value.clone(),
                },
                Entry::Check { key, passed, detail } => Entry::Check {
                    key: format!("{prefix}.{key}"),
                    passed: *passed,
                    detail: detail.clone(),
                },
            });
        }
    }

    /// Appends all entries of `other` unchanged.
    pub fn extend(&mut self, other: &Report) {
        self.entries.extend(other.entries.iter().cloned());
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find_map(|e| match e {
            Entry::Value { key: k, value } if k == key => Some(value.as_str()),
            _ => None,
        })
    }

    pub fn check_passed(&self, key: &str) -> Option<bool> {
        self.entries.iter().find_map(|e| match e {
            Entry::Check { key: k, passed, .. } if k == key => Some(*passed),
            _ => None,
        })
    }

    pub fn all_passed(&self) -> bool {
        self.entries
            .iter()
            .all(|e| !matches!(e, Entry::Check { passed: false, .. }))
    }

    pub fn failures(&self) -> Vec<&str> {
        self.entries
            .iter()
            .filter_map(|e| match e {
                Entry::Check { key, passed: false, .. } => Some(key.as_str()),
                _ => None,
            })
            .collect()
    }

    /// `key = value` lines, checks as `check.<key> = pass|fail`.
    pub fn render_machine(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            match e {
                Entry::Value { key, value } => out.push_str(&format!("{key} = {value}\n")),
                Entry::Check { key, passed, .. } => out.push_str(&format!(
                    "check.{key} = {}\n",
                    if *passed { "pass" } else { "fail" }
                )),
            }
        }
        out
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("== {} ==\n", self.title);
        let width = self
            .entries
            .iter()
            .map(|e| match e {
                Entry::Value { key, .. } | Entry::Check { key, .. } => key.len(),
            })
            .max()
            .unwrap_or(0);
        for e in &self.entries {
            match e {
                Entry::Value { key, value } => {
                    out.push_str(&format!("  {key:<width$}  {value}\n"));
                }
                Entry::Check { key, passed, detail } => {
                    let mark = if *passed { "pass" } else { "FAIL" };
                    if detail.is_empty() {
                        out.push_str(&format!("  {key:<width$}  [{mark}]\n"));
                    } else {
                        out.push_str(&format!("  {key:<width$}  [{mark}] {detail}\n"));
                    }
                }
            }
        }
        if self.all_passed() {
            out.push_str("  all checks pass\n");
        } else {
            out.push_str(&format!("  failed: {}\n", self.failures().join(", ")));
        }
        out
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn machine_rendering() {
        let mut r = Report::new("demo");
        r.value("degree", 8).check("norm_identity", true, "");
        assert_eq!(r.render_machine(), "degree = 8\ncheck.norm_identity = pass\n");
        assert!(r.all_passed());
        r.check("o_avoidance", false, "zero coefficient");
        assert_eq!(r.failures(), vec!["o_avoidance"]);
        assert!(r.render_text().contains("failed: o_avoidance"));
    }
}
