//! Finite magmas from Cayley tables: parsing, gyration derivation, and
//! exhaustive gyrogroup classification.
//!
//! A table of order `n` lists `a ⊕ b` for all `a, b`. The classifier finds
//! left identities and left inverses, derives candidate gyrations through
//! `gyr[a,b]c = ⊖(a⊕b) ⊕ {a⊕(b⊕c)}`, and then checks the axioms G1–G5 and
//! the gyrocommutative law G6 over *all* tuples — verdicts are exact, never
//! sampled. Every negative verdict carries a counterexample that replays
//! against the raw table.
//!
//! When several left identities or left inverses exist, the smallest index
//! is used and all candidates are reported; if swapping in any single
//! alternative candidate changes the verdict, the table is reported as
//! `NotGyrogroup` with the ambiguity recorded rather than silently keeping
//! the lucky witness.

use serde::Serialize;

use crate::axioms::Realization;
use crate::error::{GyroError, Result};
use crate::numeric::Tolerance;

/// Exhaustive classification is O(n³)–O(n⁴); this cap keeps it at desk scale.
pub const MAX_ORDER: usize = 64;

/// An `n × n` operation table over elements `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    n: usize,
    entries: Vec<usize>,
}

impl CayleyTable {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(GyroError::TableParse {
                line: 0,
                message: "table has no rows".into(),
            });
        }
        if n > MAX_ORDER {
            return Err(GyroError::OrderCap {
                order: n,
                cap: MAX_ORDER,
            });
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GyroError::TableParse {
                    line: i + 1,
                    message: format!("row {i} has {} entries, expected {n}", row.len()),
                });
            }
            for &value in row {
                if value >= n {
                    return Err(GyroError::TableParse {
                        line: i + 1,
                        message: format!("entry {value} out of range 0..{n}"),
                    });
                }
                entries.push(value);
            }
        }
        Ok(Self { n, entries })
    }

    /// Parses the table file format: optional full-line `#` comments and
    /// blank lines, then the order `n`, then `n` rows of `n` whitespace
    /// separated entries in `0..n` (row `a` lists `a⊕0 … a⊕(n−1)`).
    pub fn parse(text: &str) -> Result<Self> {
        let mut order: Option<usize> = None;
        let mut rows: Vec<Vec<usize>> = Vec::new();
        for (line_index, raw) in text.lines().enumerate() {
            let line_no = line_index + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match order {
                None => {
                    let n: usize = line.parse().map_err(|_| GyroError::TableParse {
                        line: line_no,
                        message: format!("expected the table order, found {line:?}"),
                    })?;
                    if n == 0 {
                        return Err(GyroError::TableParse {
                            line: line_no,
                            message: "table order must be at least 1".into(),
                        });
                    }
                    if n > MAX_ORDER {
                        return Err(GyroError::OrderCap {
                            order: n,
                            cap: MAX_ORDER,
                        });
                    }
                    order = Some(n);
                }
                Some(n) => {
                    if rows.len() == n {
                        return Err(GyroError::TableParse {
                            line: line_no,
                            message: format!("expected exactly {n} rows, found extra data"),
                        });
                    }
                    let mut row = Vec::with_capacity(n);
                    for token in line.split_whitespace() {
                        let value: usize =
                            token.parse().map_err(|_| GyroError::TableParse {
                                line: line_no,
                                message: format!("malformed entry {token:?}"),
                            })?;
                        if value >= n {
                            return Err(GyroError::TableParse {
                                line: line_no,
                                message: format!("entry {value} out of range 0..{n}"),
                            });
                        }
                        row.push(value);
                    }
                    if row.len() != n {
                        return Err(GyroError::TableParse {
                            line: line_no,
                            message: format!("row has {} entries, expected {n}", row.len()),
                        });
                    }
                    rows.push(row);
                }
            }
        }
        let n = order.ok_or(GyroError::TableParse {
            line: 0,
            message: "empty table file".into(),
        })?;
        if rows.len() != n {
            return Err(GyroError::TableParse {
                line: 0,
                message: format!("expected {n} rows, found {}", rows.len()),
            });
        }
        Self::new(rows)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `a ⊕ b`.
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.entries[a * self.n + b]
    }

    /// Overwrites one entry; used to study near-miss tables.
    pub fn set(&mut self, a: usize, b: usize, value: usize) -> Result<()> {
        if a >= self.n || b >= self.n || value >= self.n {
            return Err(GyroError::TableParse {
                line: 0,
                message: format!("set({a},{b},{value}) out of range for order {}", self.n),
            });
        }
        self.entries[a * self.n + b] = value;
        Ok(())
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|a| (a..self.n).all(|b| self.op(a, b) == self.op(b, a)))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for a in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|b| self.op(a, b).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// The cyclic group of order `n`: `a ⊕ b = a + b (mod n)`.
    pub fn cyclic(n: usize) -> Self {
        assert!((1..=MAX_ORDER).contains(&n));
        let entries = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a + b) % n))
            .collect();
        Self { n, entries }
    }

    /// The Klein four-group: componentwise xor on two bits.
    pub fn klein_four() -> Self {
        let entries = (0..4).flat_map(|a| (0..4).map(move |b| a ^ b)).collect();
        Self { n: 4, entries }
    }

    /// The symmetric group S₃ on permutations of three symbols, indexed in
    /// lexicographic one-line order, with `(a ∘ b)(x) = a[b[x]]`.
    pub fn symmetric_3() -> Self {
        const PERMS: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let index_of = |p: [usize; 3]| PERMS.iter().position(|q| *q == p).unwrap();
        let entries = PERMS
            .iter()
            .flat_map(|a| {
                PERMS
                    .iter()
                    .map(move |b| index_of([a[b[0]], a[b[1]], a[b[2]]]))
            })
            .collect();
        Self { n: 6, entries }
    }
}

/// All `e` with `e ⊕ a = a` for every `a`.
pub fn find_left_identities(table: &CayleyTable) -> Vec<usize> {
    (0..table.order())
        .filter(|&e| (0..table.order()).all(|a| table.op(e, a) == a))
        .collect()
}

/// For each element `a`, every `x` with `x ⊕ a = e`.
pub fn left_inverse_candidates(table: &CayleyTable, e: usize) -> Vec<Vec<usize>> {
    (0..table.order())
        .map(|a| {
            (0..table.order())
                .filter(|&x| table.op(x, a) == e)
                .collect()
        })
        .collect()
}

/// The candidate gyration tables `gyr[a][b]: c ↦ ⊖(a⊕b) ⊕ {a⊕(b⊕c)}` derived
/// from a chosen identity and one left inverse per element. Whether each map
/// is a permutation satisfying the gyrogroup axioms is decided by
/// [`classify`].
pub fn derive_gyrations(
    table: &CayleyTable,
    inverses: &[usize],
) -> Vec<Vec<Vec<usize>>> {
    let n = table.order();
    (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let neg_ab = inverses[table.op(a, b)];
                    (0..n)
                        .map(|c| table.op(neg_ab, table.op(a, table.op(b, c))))
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// Axiom that a negative verdict names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FailedAxiom {
    G1,
    G2,
    G3,
    G4,
    G5,
    /// A different admissible identity/inverse choice changes the verdict.
    Ambiguity,
}

impl std::fmt::Display for FailedAxiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            FailedAxiom::G1 => "G1",
            FailedAxiom::G2 => "G2",
            FailedAxiom::G3 => "G3",
            FailedAxiom::G4 => "G4",
            FailedAxiom::G5 => "G5",
            FailedAxiom::Ambiguity => "ambiguity",
        };
        f.write_str(s)
    }
}

/// A concrete witness of an axiom violation, replayable against the table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TableCounterexample {
    /// For every candidate `e`, the first `a` with `e ⊕ a ≠ a`.
    NoLeftIdentity { witnesses: Vec<IdentityMiss> },
    /// `column[x] = x ⊕ element`; none of them equals the identity.
    NoLeftInverse { element: usize, column: Vec<usize> },
    /// `lhs = a⊕(b⊕c) ≠ (a⊕b)⊕gyr[a,b]c = rhs`.
    G3Violation {
        a: usize,
        b: usize,
        c: usize,
        gyr_c: usize,
        lhs: usize,
        rhs: usize,
    },
    /// The solutions `X` of `(a⊕b)⊕X = a⊕(b⊕c)` are not unique.
    G3NotUnique {
        a: usize,
        b: usize,
        c: usize,
        solutions: Vec<usize>,
    },
    /// The derived map `gyr[a,b]` is not a permutation.
    GyrationNotBijective {
        a: usize,
        b: usize,
        image: Vec<usize>,
    },
    /// `gyr[a,b](c⊕d) ≠ gyr[a,b]c ⊕ gyr[a,b]d`.
    AutomorphismViolation {
        a: usize,
        b: usize,
        c: usize,
        d: usize,
        lhs: usize,
        rhs: usize,
    },
    /// `gyr[a⊕b, b]c ≠ gyr[a,b]c`.
    LeftLoopViolation {
        a: usize,
        b: usize,
        c: usize,
        lhs: usize,
        rhs: usize,
    },
    /// Swapping one admissible witness changes the verdict.
    AmbiguousWitness {
        role: AmbiguityRole,
        element: Option<usize>,
        chosen: usize,
        alternative: usize,
        verdict_chosen: String,
        verdict_alternative: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AmbiguityRole {
    Identity,
    Inverse,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityMiss {
    pub e: usize,
    pub a: usize,
    pub result: usize,
}

/// Final verdict for a table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Gyrogroup {
        gyrocommutative: bool,
        trivial_gyrations: bool,
    },
    NotGyrogroup {
        failed_axiom: FailedAxiom,
        counterexample: TableCounterexample,
    },
}

impl Verdict {
    pub fn is_gyrogroup(&self) -> bool {
        matches!(self, Verdict::Gyrogroup { .. })
    }

    /// Verdict signature used when comparing witness choices: the class plus
    /// the classification flags. Which axiom a rejected table fails first is
    /// not part of the verdict, so two choices failing different axioms do
    /// not count as a changed verdict.
    pub fn signature(&self) -> String {
        match self {
            Verdict::Gyrogroup {
                gyrocommutative,
                trivial_gyrations,
            } => format!(
                "gyrogroup(gyrocommutative={gyrocommutative},trivial_gyrations={trivial_gyrations})"
            ),
            Verdict::NotGyrogroup { .. } => "not_gyrogroup".to_string(),
        }
    }
}

/// Everything the classifier learned about a table.
#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub order: usize,
    pub verdict: Verdict,
    /// The chosen left identity, when one exists.
    pub identity: Option<usize>,
    pub identity_candidates: Vec<usize>,
    /// The chosen left inverse of each element, when all exist.
    pub inverses: Option<Vec<usize>>,
    pub inverse_candidates: Option<Vec<Vec<usize>>>,
    /// `gyration_tables[a][b]` is the permutation `c ↦ gyr[a,b]c`.
    pub gyration_tables: Option<Vec<Vec<Vec<usize>>>>,
    pub diagnostics: Vec<String>,
}

/// Outcome of checking G3–G6 for one concrete witness choice.
enum CoreOutcome {
    Gyrogroup {
        gyrocommutative: bool,
        trivial_gyrations: bool,
        tables: Vec<Vec<Vec<usize>>>,
    },
    Failed {
        axiom: FailedAxiom,
        counterexample: TableCounterexample,
    },
}

impl CoreOutcome {
    fn verdict(&self) -> Verdict {
        match self {
            CoreOutcome::Gyrogroup {
                gyrocommutative,
                trivial_gyrations,
                ..
            } => Verdict::Gyrogroup {
                gyrocommutative: *gyrocommutative,
                trivial_gyrations: *trivial_gyrations,
            },
            CoreOutcome::Failed {
                axiom,
                counterexample,
            } => Verdict::NotGyrogroup {
                failed_axiom: *axiom,
                counterexample: counterexample.clone(),
            },
        }
    }
}

// Indices double as table elements here; range loops are the clearest form.
#[allow(clippy::needless_range_loop)]
fn check_core(table: &CayleyTable, inverses: &[usize]) -> CoreOutcome {
    let n = table.order();
    let gyr = derive_gyrations(table, inverses);

    // G3 with uniqueness: the derived gyr[a,b]c must be the single solution
    // X of (a⊕b)⊕X = a⊕(b⊕c).
    for a in 0..n {
        for b in 0..n {
            let ab = table.op(a, b);
            for c in 0..n {
                let lhs = table.op(a, table.op(b, c));
                let gyr_c = gyr[a][b][c];
                let rhs = table.op(ab, gyr_c);
                if lhs != rhs {
                    return CoreOutcome::Failed {
                        axiom: FailedAxiom::G3,
                        counterexample: TableCounterexample::G3Violation {
                            a,
                            b,
                            c,
                            gyr_c,
                            lhs,
                            rhs,
                        },
                    };
                }
                let solutions: Vec<usize> =
                    (0..n).filter(|&x| table.op(ab, x) == lhs).collect();
                if solutions.len() != 1 {
                    return CoreOutcome::Failed {
                        axiom: FailedAxiom::G3,
                        counterexample: TableCounterexample::G3NotUnique { a, b, c, solutions },
                    };
                }
            }
        }
    }

    // G4: each gyration is a bijective map respecting the operation.
    for a in 0..n {
        for b in 0..n {
            let map = &gyr[a][b];
            let mut seen = vec![false; n];
            for &image in map {
                if seen[image] {
                    return CoreOutcome::Failed {
                        axiom: FailedAxiom::G4,
                        counterexample: TableCounterexample::GyrationNotBijective {
                            a,
                            b,
                            image: map.clone(),
                        },
                    };
                }
                seen[image] = true;
            }
            for c in 0..n {
                for d in 0..n {
                    let lhs = map[table.op(c, d)];
                    let rhs = table.op(map[c], map[d]);
                    if lhs != rhs {
                        return CoreOutcome::Failed {
                            axiom: FailedAxiom::G4,
                            counterexample: TableCounterexample::AutomorphismViolation {
                                a,
                                b,
                                c,
                                d,
                                lhs,
                                rhs,
                            },
                        };
                    }
                }
            }
        }
    }

    // G5: left loop property gyr[a⊕b, b] = gyr[a,b].
    for a in 0..n {
        for b in 0..n {
            let ab = table.op(a, b);
            for c in 0..n {
                let lhs = gyr[ab][b][c];
                let rhs = gyr[a][b][c];
                if lhs != rhs {
                    return CoreOutcome::Failed {
                        axiom: FailedAxiom::G5,
                        counterexample: TableCounterexample::LeftLoopViolation {
                            a,
                            b,
                            c,
                            lhs,
                            rhs,
                        },
                    };
                }
            }
        }
    }

    // G6 is a classification flag, not a failure.
    let gyrocommutative = (0..n)
        .all(|a| (0..n).all(|b| table.op(a, b) == gyr[a][b][table.op(b, a)]));
    let trivial_gyrations = (0..n)
        .all(|a| (0..n).all(|b| (0..n).all(|c| gyr[a][b][c] == c)));

    CoreOutcome::Gyrogroup {
        gyrocommutative,
        trivial_gyrations,
        tables: gyr,
    }
}

/// Classifies with a given identity: resolves inverses, checks the core
/// axioms. Used for both the primary choice and ambiguity probes.
fn classify_with_identity(table: &CayleyTable, e: usize) -> (Option<Vec<usize>>, CoreOutcome) {
    let candidates = left_inverse_candidates(table, e);
    if let Some(element) = (0..table.order()).find(|&a| candidates[a].is_empty()) {
        let column = (0..table.order()).map(|x| table.op(x, element)).collect();
        return (
            None,
            CoreOutcome::Failed {
                axiom: FailedAxiom::G2,
                counterexample: TableCounterexample::NoLeftInverse { element, column },
            },
        );
    }
    let inverses: Vec<usize> = candidates.iter().map(|c| c[0]).collect();
    let outcome = check_core(table, &inverses);
    (Some(inverses), outcome)
}

/// Exhaustively classifies a table as a gyrogroup (with gyrocommutativity
/// and triviality flags) or a non-gyrogroup with a named failing axiom and a
/// replayable counterexample.
pub fn classify(table: &CayleyTable) -> Classification {
    let n = table.order();
    let identity_candidates = find_left_identities(table);
    let mut diagnostics = Vec::new();

    let Some(&e) = identity_candidates.first() else {
        let witnesses = (0..n)
            .map(|cand| {
                let a = (0..n)
                    .find(|&a| table.op(cand, a) != a)
                    .expect("candidate is not an identity");
                IdentityMiss {
                    e: cand,
                    a,
                    result: table.op(cand, a),
                }
            })
            .collect();
        return Classification {
            order: n,
            verdict: Verdict::NotGyrogroup {
                failed_axiom: FailedAxiom::G1,
                counterexample: TableCounterexample::NoLeftIdentity { witnesses },
            },
            identity: None,
            identity_candidates,
            inverses: None,
            inverse_candidates: None,
            gyration_tables: None,
            diagnostics,
        };
    };

    if identity_candidates.len() > 1 {
        diagnostics.push(format!(
            "multiple left identities: {identity_candidates:?}; using {e}"
        ));
    }

    let inverse_candidates = left_inverse_candidates(table, e);
    let (inverses, outcome) = classify_with_identity(table, e);
    let primary_verdict = outcome.verdict();

    for (a, cands) in inverse_candidates.iter().enumerate() {
        if cands.len() > 1 {
            diagnostics.push(format!(
                "element {a} has multiple left inverses: {cands:?}; using {}",
                cands[0]
            ));
        }
    }

    // Sensitivity scan: does any single alternative witness change the
    // verdict (or any gyration table)?
    let mut ambiguity: Option<TableCounterexample> = None;
    for &alt_e in identity_candidates.iter().skip(1) {
        let (_, alt_outcome) = classify_with_identity(table, alt_e);
        let alt_verdict = alt_outcome.verdict();
        if alt_verdict.signature() != primary_verdict.signature() && ambiguity.is_none() {
            ambiguity = Some(TableCounterexample::AmbiguousWitness {
                role: AmbiguityRole::Identity,
                element: None,
                chosen: e,
                alternative: alt_e,
                verdict_chosen: primary_verdict.signature(),
                verdict_alternative: alt_verdict.signature(),
            });
        }
    }
    if let Some(base_inverses) = &inverses {
        let base_tables = derive_gyrations(table, base_inverses);
        for a in 0..n {
            for &alt in inverse_candidates[a].iter().skip(1) {
                let mut swapped = base_inverses.clone();
                swapped[a] = alt;
                if derive_gyrations(table, &swapped) != base_tables {
                    diagnostics.push(format!(
                        "inverse choice {alt} for element {a} changes the gyration tables"
                    ));
                }
                let alt_verdict = check_core(table, &swapped).verdict();
                if alt_verdict.signature() != primary_verdict.signature()
                    && ambiguity.is_none()
                {
                    ambiguity = Some(TableCounterexample::AmbiguousWitness {
                        role: AmbiguityRole::Inverse,
                        element: Some(a),
                        chosen: base_inverses[a],
                        alternative: alt,
                        verdict_chosen: primary_verdict.signature(),
                        verdict_alternative: alt_verdict.signature(),
                    });
                }
            }
        }
    }

    let (verdict, gyration_tables) = match (ambiguity, outcome) {
        (Some(counterexample), _) => (
            Verdict::NotGyrogroup {
                failed_axiom: FailedAxiom::Ambiguity,
                counterexample,
            },
            None,
        ),
        (
            None,
            CoreOutcome::Gyrogroup {
                gyrocommutative,
                trivial_gyrations,
                tables,
            },
        ) => (
            Verdict::Gyrogroup {
                gyrocommutative,
                trivial_gyrations,
            },
            Some(tables),
        ),
        (
            None,
            CoreOutcome::Failed {
                axiom,
                counterexample,
            },
        ) => (
            Verdict::NotGyrogroup {
                failed_axiom: axiom,
                counterexample,
            },
            None,
        ),
    };

    Classification {
        order: n,
        verdict,
        identity: Some(e),
        identity_candidates,
        inverses,
        inverse_candidates: Some(inverse_candidates),
        gyration_tables,
        diagnostics,
    }
}

/// Re-evaluates a recorded counterexample against the raw table, confirming
/// the violation is genuine. `identity`/`inverses` are the witnesses the
/// classification chose.
pub fn replay_counterexample(
    table: &CayleyTable,
    identity: Option<usize>,
    inverses: Option<&[usize]>,
    cx: &TableCounterexample,
) -> bool {
    let n = table.order();
    let gyr_of = |inv: &[usize], a: usize, b: usize, c: usize| {
        table.op(inv[table.op(a, b)], table.op(a, table.op(b, c)))
    };
    match cx {
        TableCounterexample::NoLeftIdentity { witnesses } => {
            witnesses.len() == n
                && (0..n).all(|e| witnesses.iter().any(|w| w.e == e))
                && witnesses
                    .iter()
                    .all(|w| table.op(w.e, w.a) == w.result && w.result != w.a)
        }
        TableCounterexample::NoLeftInverse { element, column } => {
            let Some(e) = identity else { return false };
            column.len() == n
                && (0..n).all(|x| table.op(x, *element) == column[x])
                && column.iter().all(|&value| value != e)
        }
        TableCounterexample::G3Violation {
            a,
            b,
            c,
            gyr_c,
            lhs,
            rhs,
        } => {
            let Some(inv) = inverses else { return false };
            gyr_of(inv, *a, *b, *c) == *gyr_c
                && table.op(*a, table.op(*b, *c)) == *lhs
                && table.op(table.op(*a, *b), *gyr_c) == *rhs
                && lhs != rhs
        }
        TableCounterexample::G3NotUnique { a, b, c, solutions } => {
            let ab = table.op(*a, *b);
            let lhs = table.op(*a, table.op(*b, *c));
            let found: Vec<usize> = (0..n).filter(|&x| table.op(ab, x) == lhs).collect();
            found == *solutions && solutions.len() != 1
        }
        TableCounterexample::GyrationNotBijective { a, b, image } => {
            let Some(inv) = inverses else { return false };
            let derived: Vec<usize> = (0..n).map(|c| gyr_of(inv, *a, *b, c)).collect();
            if derived != *image {
                return false;
            }
            let mut seen = vec![false; n];
            image.iter().any(|&i| std::mem::replace(&mut seen[i], true))
        }
        TableCounterexample::AutomorphismViolation {
            a,
            b,
            c,
            d,
            lhs,
            rhs,
        } => {
            let Some(inv) = inverses else { return false };
            gyr_of(inv, *a, *b, table.op(*c, *d)) == *lhs
                && table.op(gyr_of(inv, *a, *b, *c), gyr_of(inv, *a, *b, *d)) == *rhs
                && lhs != rhs
        }
        TableCounterexample::LeftLoopViolation { a, b, c, lhs, rhs } => {
            let Some(inv) = inverses else { return false };
            gyr_of(inv, table.op(*a, *b), *b, *c) == *lhs
                && gyr_of(inv, *a, *b, *c) == *rhs
                && lhs != rhs
        }
        TableCounterexample::AmbiguousWitness {
            role,
            element,
            chosen,
            alternative,
            verdict_chosen,
            verdict_alternative,
        } => {
            let differ = verdict_chosen != verdict_alternative;
            match role {
                AmbiguityRole::Identity => {
                    let (_, alt) = classify_with_identity(table, *alternative);
                    let (_, base) = classify_with_identity(table, *chosen);
                    differ
                        && base.verdict().signature() == *verdict_chosen
                        && alt.verdict().signature() == *verdict_alternative
                }
                AmbiguityRole::Inverse => {
                    let Some(inv) = inverses else { return false };
                    let Some(a) = element else { return false };
                    let mut swapped = inv.to_vec();
                    if swapped[*a] != *chosen {
                        return false;
                    }
                    swapped[*a] = *alternative;
                    differ
                        && check_core(table, inv).verdict().signature() == *verdict_chosen
                        && check_core(table, &swapped).verdict().signature()
                            == *verdict_alternative
                }
            }
        }
    }
}

/// A finite table presented to the axiom engine. Checks become exhaustive:
/// every tuple of elements is visited. Identity and inverses fall back to
/// index 0 when missing, so G1/G2 fail with honest counterexamples instead
/// of erroring.
#[derive(Debug, Clone)]
pub struct FiniteRealization {
    table: CayleyTable,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteRealization {
    pub fn new(table: CayleyTable) -> Self {
        let identity = find_left_identities(&table).first().copied().unwrap_or(0);
        let inverses = left_inverse_candidates(&table, identity)
            .iter()
            .map(|c| c.first().copied().unwrap_or(0))
            .collect();
        Self {
            table,
            identity,
            inverses,
        }
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }
}

impl Realization for FiniteRealization {
    type Elem = usize;

    fn zero(&self) -> usize {
        self.identity
    }

    fn op(&self, a: &usize, b: &usize) -> usize {
        self.table.op(*a, *b)
    }

    fn neg(&self, a: &usize) -> usize {
        self.inverses[*a]
    }

    fn gyr(&self, a: &usize, b: &usize, c: &usize) -> usize {
        let neg_ab = self.inverses[self.table.op(*a, *b)];
        self.table
            .op(neg_ab, self.table.op(*a, self.table.op(*b, *c)))
    }

    fn sample(&self, seed: u64, index: u64) -> usize {
        ((seed ^ index) % self.table.order() as u64) as usize
    }

    fn residual(&self, x: &usize, y: &usize, _tol: &Tolerance) -> f64 {
        if x == y {
            0.0
        } else {
            1.0
        }
    }

    fn exact(&self) -> bool {
        true
    }

    fn display(&self, e: &usize) -> String {
        e.to_string()
    }

    fn carrier_len(&self) -> Option<usize> {
        Some(self.table.order())
    }

    fn element(&self, i: usize) -> Option<usize> {
        (i < self.table.order()).then_some(i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{run_suite, SuiteConfig};

    fn exact_cfg() -> SuiteConfig {
        SuiteConfig::new(0, 1, Tolerance::exact()).unwrap()
    }

    #[test]
    fn parse_small_groups() {
        let z2 = CayleyTable::parse("2\n0 1\n1 0").unwrap();
        assert_eq!(z2, CayleyTable::cyclic(2));
        let z3 = CayleyTable::parse("3\n0 1 2\n1 2 0\n2 0 1").unwrap();
        assert_eq!(z3, CayleyTable::cyclic(3));
    }

    #[test]
    fn parse_accepts_comments_and_blank_lines() {
        let text = "# the cyclic group of order 2\n\n2\n# rows follow\n0 1\n1 0\n";
        assert_eq!(CayleyTable::parse(text).unwrap(), CayleyTable::cyclic(2));
    }

    #[test]
    fn parse_rejects_malformed_input() {
        // entry out of range
        assert!(matches!(
            CayleyTable::parse("2\n0 1\n1 2"),
            Err(GyroError::TableParse { line: 3, .. })
        ));
        // wrong row count
        assert!(CayleyTable::parse("3\n0 1 2\n1 2 0").is_err());
        // extra rows
        assert!(CayleyTable::parse("2\n0 1\n1 0\n0 1").is_err());
        // malformed entry
        assert!(CayleyTable::parse("2\n0 x\n1 0").is_err());
        // empty file
        assert!(CayleyTable::parse("# nothing\n").is_err());
        // order cap
        assert!(matches!(
            CayleyTable::parse("65\n"),
            Err(GyroError::OrderCap { order: 65, cap: 64 })
        ));
    }

    #[test]
    fn identities_examples() {
        assert_eq!(find_left_identities(&CayleyTable::cyclic(3)), vec![0]);
        let t = CayleyTable::parse("2\n0 1\n1 1").unwrap();
        assert_eq!(find_left_identities(&t), vec![0]);
        let constant = CayleyTable::new(vec![vec![0, 0], vec![0, 0]]).unwrap();
        assert_eq!(find_left_identities(&constant), Vec::<usize>::new());
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn groups_have_trivial_gyrations() {
        for table in [
            CayleyTable::cyclic(2),
            CayleyTable::cyclic(3),
            CayleyTable::cyclic(6),
            CayleyTable::klein_four(),
            CayleyTable::symmetric_3(),
        ] {
            let inverses: Vec<usize> = left_inverse_candidates(&table, 0)
                .iter()
                .map(|c| c[0])
                .collect();
            let gyr = derive_gyrations(&table, &inverses);
            for a in 0..table.order() {
                for b in 0..table.order() {
                    for c in 0..table.order() {
                        assert_eq!(gyr[a][b][c], c);
                    }
                }
            }
        }
    }

    #[test]
    fn missing_inverse_detected() {
        // Element 1 has no left inverse: x ⊕ 1 = 1 for both x.
        let t = CayleyTable::parse("2\n0 1\n1 1").unwrap();
        let classification = classify(&t);
        match &classification.verdict {
            Verdict::NotGyrogroup {
                failed_axiom,
                counterexample,
            } => {
                assert_eq!(*failed_axiom, FailedAxiom::G2);
                assert!(replay_counterexample(
                    &t,
                    classification.identity,
                    classification.inverses.as_deref(),
                    counterexample
                ));
            }
            v => panic!("expected G2 failure, got {v:?}"),
        }
    }

    #[test]
    fn cyclic_groups_classify_gyrocommutative_trivial() {
        for n in 2..=6 {
            let c = classify(&CayleyTable::cyclic(n));
            assert_eq!(
                c.verdict,
                Verdict::Gyrogroup {
                    gyrocommutative: true,
                    trivial_gyrations: true
                },
                "Z_{n}"
            );
            assert_eq!(c.identity, Some(0));
        }
        let c = classify(&CayleyTable::klein_four());
        assert!(matches!(
            c.verdict,
            Verdict::Gyrogroup {
                gyrocommutative: true,
                trivial_gyrations: true
            }
        ));
    }

    #[test]
    fn symmetric_group_is_non_gyrocommutative() {
        let c = classify(&CayleyTable::symmetric_3());
        assert_eq!(
            c.verdict,
            Verdict::Gyrogroup {
                gyrocommutative: false,
                trivial_gyrations: true
            }
        );
    }

    #[test]
    fn mutated_cyclic_table_fails_with_replayable_counterexample() {
        let mut t = CayleyTable::cyclic(3);
        t.set(1, 2, 1).unwrap();
        let c = classify(&t);
        match &c.verdict {
            Verdict::NotGyrogroup { counterexample, .. } => {
                assert!(replay_counterexample(
                    &t,
                    c.identity,
                    c.inverses.as_deref(),
                    counterexample
                ));
            }
            v => panic!("mutated table classified as {v:?}"),
        }
    }

    #[test]
    fn constant_table_fails_g1() {
        let t = CayleyTable::new(vec![vec![0, 0], vec![0, 0]]).unwrap();
        let c = classify(&t);
        match &c.verdict {
            Verdict::NotGyrogroup {
                failed_axiom,
                counterexample,
            } => {
                assert_eq!(*failed_axiom, FailedAxiom::G1);
                assert!(replay_counterexample(&t, None, None, counterexample));
            }
            v => panic!("expected G1 failure, got {v:?}"),
        }
    }

    #[test]
    fn classification_is_deterministic() {
        let t = CayleyTable::symmetric_3();
        assert_eq!(classify(&t), classify(&t));
    }

    #[test]
    fn multiple_left_identities_are_surfaced() {
        // Both rows are the identity row, so 0 and 1 are left identities;
        // neither admits left inverses for every element.
        let t = CayleyTable::new(vec![vec![0, 1], vec![0, 1]]).unwrap();
        let c = classify(&t);
        assert_eq!(c.identity_candidates, vec![0, 1]);
        assert_eq!(c.identity, Some(0));
        assert!(c
            .diagnostics
            .iter()
            .any(|d| d.contains("multiple left identities")));
        match &c.verdict {
            Verdict::NotGyrogroup { failed_axiom, .. } => {
                assert_eq!(*failed_axiom, FailedAxiom::G2);
            }
            v => panic!("expected G2 failure, got {v:?}"),
        }
    }

    #[test]
    fn multiple_left_inverses_are_surfaced() {
        // Element 1 has two left inverses (both 1 and 2 map it to 0), and
        // the two choices derive different gyration tables.
        let t = CayleyTable::new(vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 1]]).unwrap();
        let c = classify(&t);
        assert_eq!(c.identity, Some(0));
        let candidates = c.inverse_candidates.as_ref().unwrap();
        assert_eq!(candidates[1], vec![1, 2]);
        assert!(c
            .diagnostics
            .iter()
            .any(|d| d.contains("multiple left inverses")));
        assert!(c
            .diagnostics
            .iter()
            .any(|d| d.contains("changes the gyration tables")));
        // Every admissible witness choice rejects this table, so the verdict
        // is a plain failure rather than an ambiguity.
        match &c.verdict {
            Verdict::NotGyrogroup {
                failed_axiom,
                counterexample,
            } => {
                assert_ne!(*failed_axiom, FailedAxiom::Ambiguity);
                assert!(replay_counterexample(
                    &t,
                    c.identity,
                    c.inverses.as_deref(),
                    counterexample
                ));
            }
            v => panic!("expected failure, got {v:?}"),
        }
    }

    #[test]
    fn commutativity_matches_gyrocommutativity_on_groups() {
        for table in [
            CayleyTable::cyclic(4),
            CayleyTable::cyclic(5),
            CayleyTable::klein_four(),
            CayleyTable::symmetric_3(),
        ] {
            let c = classify(&table);
            match c.verdict {
                Verdict::Gyrogroup {
                    gyrocommutative, ..
                } => assert_eq!(gyrocommutative, table.is_commutative()),
                v => panic!("group classified as {v:?}"),
            }
        }
    }

    #[test]
    fn engine_agrees_on_finite_carriers() {
        // Groups pass the full suite exhaustively (except G6 on S3, which is
        // not gyrocommutative).
        let z4 = FiniteRealization::new(CayleyTable::cyclic(4));
        let report = run_suite(&z4, &exact_cfg());
        assert!(report.all_passed);
        assert_eq!(report.check("g1_left_identity").unwrap().samples_run, 4);
        assert_eq!(report.check("g4_automorphism").unwrap().samples_run, 256);

        // S3 is a gyrogroup but not gyrocommutative: G6 fails, and with it
        // the automorphic inverse property, which is equivalent to
        // gyrocommutativity ((ab)^-1 = a^-1 b^-1 only in abelian groups).
        let s3 = FiniteRealization::new(CayleyTable::symmetric_3());
        let report = run_suite(&s3, &exact_cfg());
        assert!(!report.all_passed);
        for check in &report.checks {
            if check.name == "g6_gyrocommutative" || check.name == "automorphic_inverse" {
                assert!(check.failures > 0, "{} unexpectedly passed", check.name);
            } else {
                assert_eq!(check.failures, 0, "{} failed", check.name);
            }
        }

        // A table with no left identity fails G1 in the engine too.
        let constant =
            FiniteRealization::new(CayleyTable::new(vec![vec![0, 0], vec![0, 0]]).unwrap());
        let report = run_suite(&constant, &exact_cfg());
        let g1 = report.check("g1_left_identity").unwrap();
        assert!(g1.failures > 0);
        assert!(g1.first_counterexample.is_some());
    }

    #[test]
    fn round_trip_text() {
        let t = CayleyTable::symmetric_3();
        assert_eq!(CayleyTable::parse(&t.to_text()).unwrap(), t);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_table() -> impl Strategy<Value = CayleyTable> {
            (2usize..=4)
                .prop_flat_map(|n| {
                    (
                        prop::collection::vec(0..n, n * n),
                        any::<bool>(),
                        Just(n),
                    )
                })
                .prop_map(|(entries, seed_identity, n)| {
                    let mut rows: Vec<Vec<usize>> =
                        entries.chunks(n).map(|c| c.to_vec()).collect();
                    if seed_identity {
                        // Give half the tables a genuine identity row so the
                        // deeper axiom paths get exercised.
                        rows[0] = (0..n).collect();
                    }
                    CayleyTable::new(rows).unwrap()
                })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(160))]

            #[test]
            fn verdicts_replay_and_are_deterministic(table in arb_table()) {
                let c = classify(&table);
                prop_assert_eq!(&c, &classify(&table));
                if let Verdict::NotGyrogroup { counterexample, .. } = &c.verdict {
                    prop_assert!(
                        replay_counterexample(
                            &table,
                            c.identity,
                            c.inverses.as_deref(),
                            counterexample
                        ),
                        "counterexample does not replay for table {:?}",
                        table
                    );
                }
            }
        }
    }
}
