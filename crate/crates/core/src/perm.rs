//! Permutations on `{0, …, degree-1}` with 1-based cycle notation for
//! display and parsing (`(1 3 2)` maps 1→3, 3→2, 2→1).

use crate::error::{Error, Result};

/// A bijection on `{0, …, degree-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    mapping: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            mapping: (0..degree).collect(),
        }
    }

    /// Builds a permutation from an explicit image list; rejects
    /// non-bijections.
    pub fn from_mapping(mapping: Vec<usize>) -> Result<Self> {
        let degree = mapping.len();
        let mut seen = vec![false; degree];
        for &image in &mapping {
            if image >= degree {
                return Err(Error::BadPermutation(format!(
                    "image {image} out of range for degree {degree}"
                )));
            }
            if seen[image] {
                return Err(Error::BadPermutation(format!(
                    "image {image} appears twice"
                )));
            }
            seen[image] = true;
        }
        Ok(Permutation { mapping })
    }

    pub fn degree(&self) -> usize {
        self.mapping.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.mapping[point]
    }

    pub fn is_identity(&self) -> bool {
        self.mapping.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Composition in "apply `self` first" order: the result maps
    /// `x ↦ then(self(x))`.
    pub fn compose(&self, then: &Permutation) -> Result<Self> {
        if self.degree() != then.degree() {
            return Err(Error::BadPermutation(format!(
                "degree mismatch: {} vs {}",
                self.degree(),
                then.degree()
            )));
        }
        Ok(Permutation {
            mapping: self.mapping.iter().map(|&x| then.mapping[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut mapping = vec![0; self.degree()];
        for (i, &j) in self.mapping.iter().enumerate() {
            mapping[j] = i;
        }
        Permutation { mapping }
    }

    /// Parses disjoint cycle notation with 1-based points: `(1 2)(3 4)`.
    /// `e` and `()` denote the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed == "e" || trimmed == "()" {
            return Ok(Permutation::identity(degree));
        }
        let mut mapping: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        let mut rest = trimmed;
        while !rest.is_empty() {
            let Some(stripped) = rest.strip_prefix('(') else {
                return Err(Error::BadPermutation(format!(
                    "expected `(` in cycle notation, got `{rest}`"
                )));
            };
            let Some(close) = stripped.find(')') else {
                return Err(Error::BadPermutation("unclosed cycle".into()));
            };
            let body = &stripped[..close];
            let mut points = Vec::new();
            for token in body.split_whitespace() {
                let value: usize = token
                    .parse()
                    .map_err(|_| Error::BadPermutation(format!("bad point `{token}`")))?;
                if value == 0 || value > degree {
                    return Err(Error::BadPermutation(format!(
                        "point {value} out of range 1..={degree}"
                    )));
                }
                let point = value - 1;
                if moved[point] {
                    return Err(Error::BadPermutation(format!(
                        "point {value} appears twice"
                    )));
                }
                moved[point] = true;
                points.push(point);
            }
            if points.len() < 2 {
                return Err(Error::BadPermutation(
                    "cycles need at least two points".into(),
                ));
            }
            for window in points.windows(2) {
                mapping[window[0]] = window[1];
            }
            mapping[points[points.len() - 1]] = points[0];
            rest = stripped[close + 1..].trim_start();
        }
        Ok(Permutation { mapping })
    }

    /// Canonical cycle notation: cycles start at their least point and are
    /// listed in increasing order of that point; the identity prints as `e`.
    pub fn cycle_notation(&self) -> String {
        let mut visited = vec![false; self.degree()];
        let mut out = String::new();
        for start in 0..self.degree() {
            if visited[start] || self.mapping[start] == start {
                continue;
            }
            out.push('(');
            let mut point = start;
            let mut first = true;
            loop {
                if !first {
                    out.push(' ');
                }
                first = false;
                out.push_str(&(point + 1).to_string());
                visited[point] = true;
                point = self.mapping[point];
                if point == start {
                    break;
                }
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push('e');
        }
        out
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.cycle_notation())
    }
}
