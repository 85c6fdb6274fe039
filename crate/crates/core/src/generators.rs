//! Named graph families.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("unknown generator `{0}` (expected complete, cycle, empty, bowtie, rook or paley)")]
    UnknownName(String),
    #[error("generator `{name}` takes {expected} parameter(s), got {found}")]
    Arity {
        name: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("invalid parameters for `{name}`: {reason}")]
    InvalidParams { name: &'static str, reason: String },
}

/// A named generator with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorSpec {
    Complete(usize),
    Cycle(usize),
    Empty(usize),
    /// Two triangles sharing vertex 0.
    Bowtie,
    /// `m x n` rook's graph: cells adjacent when they share a row or column.
    Rook(usize, usize),
    /// Paley graph on `Z_q` for a prime `q = 1 (mod 4)`.
    Paley(usize),
}

fn is_prime(q: usize) -> bool {
    q >= 2
        && (2..)
            .take_while(|d| d * d <= q)
            .all(|d| !q.is_multiple_of(d))
}

impl GeneratorSpec {
    pub fn from_parts(name: &str, params: &[usize]) -> Result<Self, GeneratorError> {
        let arity = |name: &'static str, expected: usize| {
            if params.len() == expected {
                Ok(())
            } else {
                Err(GeneratorError::Arity {
                    name,
                    expected,
                    found: params.len(),
                })
            }
        };
        let spec = match name {
            "complete" => {
                arity("complete", 1)?;
                GeneratorSpec::Complete(params[0])
            }
            "cycle" => {
                arity("cycle", 1)?;
                GeneratorSpec::Cycle(params[0])
            }
            "empty" => {
                arity("empty", 1)?;
                GeneratorSpec::Empty(params[0])
            }
            "bowtie" => {
                arity("bowtie", 0)?;
                GeneratorSpec::Bowtie
            }
            "rook" => {
                arity("rook", 2)?;
                GeneratorSpec::Rook(params[0], params[1])
            }
            "paley" => {
                arity("paley", 1)?;
                GeneratorSpec::Paley(params[0])
            }
            other => return Err(GeneratorError::UnknownName(other.to_string())),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn name(&self) -> &'static str {
        match self {
            GeneratorSpec::Complete(_) => "complete",
            GeneratorSpec::Cycle(_) => "cycle",
            GeneratorSpec::Empty(_) => "empty",
            GeneratorSpec::Bowtie => "bowtie",
            GeneratorSpec::Rook(..) => "rook",
            GeneratorSpec::Paley(_) => "paley",
        }
    }

    fn order(&self) -> usize {
        match *self {
            GeneratorSpec::Complete(k) | GeneratorSpec::Cycle(k) | GeneratorSpec::Empty(k) => k,
            GeneratorSpec::Bowtie => 5,
            GeneratorSpec::Rook(m, n) => m.saturating_mul(n),
            GeneratorSpec::Paley(q) => q,
        }
    }

    pub fn validate(&self) -> Result<(), GeneratorError> {
        let invalid = |reason: String| GeneratorError::InvalidParams {
            name: self.name(),
            reason,
        };
        match *self {
            GeneratorSpec::Cycle(k) if k < 3 => {
                return Err(invalid(format!("cycle needs at least 3 vertices, got {k}")))
            }
            GeneratorSpec::Rook(m, n) if m == 0 || n == 0 => {
                return Err(invalid(format!(
                    "rook dimensions must be >= 1, got {m}x{n}"
                )))
            }
            GeneratorSpec::Paley(q) if !is_prime(q) || q % 4 != 1 => {
                return Err(invalid(format!("{q} is not a prime congruent to 1 mod 4")))
            }
            _ => {}
        }
        let n = self.order();
        if n > MAX_VERTICES {
            return Err(invalid(format!(
                "{n} vertices exceeds the {MAX_VERTICES}-vertex limit"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Complete(k) | GeneratorSpec::Cycle(k) | GeneratorSpec::Empty(k) => {
                write!(f, "{} {k}", self.name())
            }
            GeneratorSpec::Bowtie => f.write_str("bowtie"),
            GeneratorSpec::Rook(m, n) => write!(f, "rook {m} {n}"),
            GeneratorSpec::Paley(q) => write!(f, "paley {q}"),
        }
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<Graph, GeneratorError> {
    spec.validate()?;
    let mut edges = Vec::new();
    let n = spec.order();
    match *spec {
        GeneratorSpec::Complete(k) => {
            for u in 0..k {
                edges.extend((u + 1..k).map(|v| (u, v)));
            }
        }
        GeneratorSpec::Cycle(k) => edges.extend((0..k).map(|u| (u, (u + 1) % k))),
        GeneratorSpec::Empty(_) => {}
        GeneratorSpec::Bowtie => edges.extend([(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]),
        GeneratorSpec::Rook(rows, cols) => {
            let cell = |r: usize, c: usize| r * cols + c;
            for a in 0..n {
                for b in a + 1..n {
                    let (ra, ca) = (a / cols, a % cols);
                    let (rb, cb) = (b / cols, b % cols);
                    if ra == rb || ca == cb {
                        edges.push((cell(ra, ca), cell(rb, cb)));
                    }
                }
            }
            debug_assert!(rows * cols == n);
        }
        GeneratorSpec::Paley(q) => {
            let residues: Vec<bool> = {
                let mut r = vec![false; q];
                for x in 1..q {
                    r[x * x % q] = true;
                }
                r
            };
            for u in 0..q {
                for v in u + 1..q {
                    if residues[(v - u) % q] {
                        edges.push((u, v));
                    }
                }
            }
        }
    }
    Ok(Graph::build(n, edges).expect("generator edges are in range"))
}
