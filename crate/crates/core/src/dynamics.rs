//! Iteration of line operators with exact fixed point, cycle and extinction
//! detection.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::arrangement::json::canonical_text;
use crate::arrangement::{dual_lines_op, lambda_op, profile, Arrangement, Profile, Selector};
use crate::error::{Error, Result};
use crate::field::ExactField;

/// A line operator: `Λ_{n,m}`, `𝒟_n`, or a composition (rightmost first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Operator {
    Lambda(Selector, Selector),
    DualLines(Selector),
    Compose(Vec<Operator>),
}

impl Operator {
    pub fn lambda(n: Selector, m: Selector) -> Self {
        Operator::Lambda(n, m)
    }

    /// `Λ_{≥n,≥m}`.
    pub fn lambda_at_least(n: usize, m: usize) -> Self {
        Operator::Lambda(Selector::at_least(n), Selector::at_least(m))
    }

    /// `Λ_{{n},{m}}`.
    pub fn lambda_exact(n: usize, m: usize) -> Self {
        Operator::Lambda(Selector::exactly(n), Selector::exactly(m))
    }

    pub fn apply<F: ExactField>(&self, l: &Arrangement<F>) -> Arrangement<F> {
        match self {
            Operator::Lambda(n, m) => lambda_op(n, m, l),
            Operator::DualLines(s) => dual_lines_op(s, l),
            Operator::Compose(ops) => ops.iter().rev().fold(l.clone(), |acc, op| op.apply(&acc)),
        }
    }

    /// The `(n, m)` selectors when this is a single `Λ`.
    pub fn as_lambda(&self) -> Option<(&Selector, &Selector)> {
        match self {
            Operator::Lambda(n, m) => Some((n, m)),
            Operator::Compose(v) if v.len() == 1 => v[0].as_lambda(),
            _ => None,
        }
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operator::Lambda(n, m) => write!(f, "L{{{n};{m}}}"),
            Operator::DualLines(s) => write!(f, "D{{{s}}}"),
            Operator::Compose(ops) => {
                let parts: Vec<String> = ops.iter().map(|o| o.to_string()).collect();
                write!(f, "{}", parts.join("∘"))
            }
        }
    }
}

impl FromStr for Operator {
    type Err = Error;

    /// `L{<n>;<m>}`, `L{<n>}` (same selector twice), `D{<n>}`, joined by `∘`
    /// or `.`; selectors are comma lists of integers and `>=k`.
    fn from_str(s: &str) -> Result<Self> {
        let mut ops = Vec::new();
        for part in s.split(['∘', '.']).map(str::trim) {
            let bad = || Error::InvalidSelector(format!("bad operator '{part}'"));
            let (head, body) = part.split_at(part.find('{').ok_or_else(bad)?);
            let body = body.strip_prefix('{').and_then(|b| b.strip_suffix('}')).ok_or_else(bad)?;
            match head.trim() {
                "L" | "Λ" => {
                    let (n, m) = match body.split_once(';') {
                        Some((n, m)) => (n.parse()?, m.parse()?),
                        None => {
                            let s: Selector = body.parse()?;
                            (s.clone(), s)
                        }
                    };
                    ops.push(Operator::Lambda(n, m));
                }
                "D" | "𝒟" => ops.push(Operator::DualLines(body.parse()?)),
                _ => return Err(bad()),
            }
        }
        Ok(if ops.len() == 1 { ops.pop().unwrap() } else { Operator::Compose(ops) })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    pub max_steps: usize,
    pub max_lines: usize,
    /// Steps with more lines than this get no profile (the count is kept).
    pub profile_lines: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            max_steps: 16,
            max_lines: 20_000,
            profile_lines: 8_000,
        }
    }
}

impl Budgets {
    pub fn steps(max_steps: usize) -> Self {
        Budgets {
            max_steps,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// `L_{N+1} = L_N`.
    Fixed { at: usize },
    /// `L_{k+p} = L_k` with `p ≥ 2` minimal and `k` minimal.
    Cycle { preperiod: usize, period: usize },
    /// `L_length = ∅` and no earlier step is empty.
    Extinguished { length: usize },
    BudgetLines,
    BudgetSteps,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Fixed { at } => write!(f, "fixed at step {at}"),
            Verdict::Cycle { preperiod, period } => write!(f, "cycle (preperiod {preperiod}, period {period})"),
            Verdict::Extinguished { length } => write!(f, "extinguished (length {length})"),
            Verdict::BudgetLines => write!(f, "line budget exceeded"),
            Verdict::BudgetSteps => write!(f, "step budget exhausted"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct StepRecord {
    pub index: usize,
    pub lines: usize,
    pub profile: Option<Profile>,
    pub h: Option<BigRational>,
    /// SHA-256 of the canonical text of the arrangement.
    pub digest: String,
}

#[derive(Debug, Clone)]
pub struct SequenceTrace<F: ExactField> {
    pub op: Operator,
    pub budgets: Budgets,
    pub steps: Vec<StepRecord>,
    pub verdict: Verdict,
    /// The arrangements `L_0, L_1, ...`.
    pub history: Vec<Arrangement<F>>,
}

fn record<F: ExactField>(index: usize, l: &Arrangement<F>, canon: &str, budgets: &Budgets) -> StepRecord {
    let profile = (l.len() <= budgets.profile_lines).then(|| profile(l));
    let h = profile.as_ref().and_then(|p| p.h_constant().ok());
    StepRecord {
        index,
        lines: l.len(),
        profile,
        h,
        digest: hex(&Sha256::digest(canon.as_bytes())),
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Iterates `op` from `l0` until a verdict is reached.
pub fn run_sequence<F: ExactField>(op: &Operator, l0: &Arrangement<F>, budgets: Budgets) -> SequenceTrace<F> {
    let mut seen: HashMap<String, usize> = HashMap::new();
    let canon = canonical_text(l0);
    let mut steps = vec![record(0, l0, &canon, &budgets)];
    seen.insert(canon, 0);
    let mut history = vec![l0.clone()];
    let verdict = loop {
        let n = history.len() - 1;
        let cur = &history[n];
        if cur.is_empty() {
            break Verdict::Extinguished { length: n };
        }
        if cur.len() > budgets.max_lines {
            break Verdict::BudgetLines;
        }
        if n >= budgets.max_steps {
            break Verdict::BudgetSteps;
        }
        let next = op.apply(cur);
        let canon = canonical_text(&next);
        steps.push(record(n + 1, &next, &canon, &budgets));
        let earlier = seen.get(&canon).copied();
        history.push(next);
        match earlier {
            Some(k) if k == n => break Verdict::Fixed { at: n },
            Some(k) if !history[k].is_empty() => {
                break Verdict::Cycle {
                    preperiod: k,
                    period: n + 1 - k,
                }
            }
            _ => {
                seen.insert(canon, n + 1);
            }
        }
    };
    SequenceTrace {
        op: op.clone(),
        budgets,
        steps,
        verdict,
        history,
    }
}

/// Exact `(preperiod, period)` of an orbit over a finite field. An orbit
/// that dies counts as reaching the fixed point `∅`.
pub fn orbit_over_finite_field<F: ExactField>(op: &Operator, l0: &Arrangement<F>) -> Result<(usize, usize)> {
    if l0.field().elements().is_none() {
        return Err(Error::InfiniteField);
    }
    let budgets = Budgets {
        max_steps: usize::MAX,
        max_lines: usize::MAX,
        profile_lines: 0,
    };
    let trace = run_sequence(op, l0, budgets);
    Ok(match trace.verdict {
        Verdict::Fixed { at } => (at, 1),
        Verdict::Cycle { preperiod, period } => (preperiod, period),
        Verdict::Extinguished { length } => (length, 1),
        Verdict::BudgetLines | Verdict::BudgetSteps => unreachable!("finite orbits always close"),
    })
}

impl<F: ExactField> SequenceTrace<F> {
    pub fn counts(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.lines).collect()
    }

    pub fn union_of_steps(&self, i: usize, j: usize) -> Result<Arrangement<F>> {
        let n = self.history.len();
        let get = |k: usize| {
            self.history
                .get(k)
                .ok_or_else(|| Error::OutOfRange(format!("step {k} (trace has {n} steps)")))
        };
        Ok(get(i)?.union(get(j)?))
    }

    /// Checks that every step adding a new line to an `m`-line arrangement
    /// has `m ≥ n·k` for `Λ` with smallest selector members `n`, `k`.
    pub fn growth_bound_holds(&self) -> bool {
        let Some((n, m)) = self.op.as_lambda() else {
            return true;
        };
        let bound = n.min() * m.min();
        self.history
            .windows(2)
            .all(|w| w[1].is_subset(&w[0]) || w[0].len() >= bound)
    }

    pub fn to_json(&self) -> Value {
        let steps: Vec<Value> = self
            .steps
            .iter()
            .map(|s| {
                let t: serde_json::Map<String, Value> = s
                    .profile
                    .iter()
                    .flat_map(|p| p.t.iter())
                    .map(|(k, n)| (k.to_string(), json!(n)))
                    .collect();
                json!({
                    "index": s.index,
                    "lines": s.lines,
                    "t": if s.profile.is_some() { Value::Object(t) } else { Value::Null },
                    "h": s.h.as_ref().map(|h| h.to_string()),
                    "digest": s.digest,
                })
            })
            .collect();
        let verdict = match self.verdict {
            Verdict::Fixed { at } => json!({"kind": "fixed", "at": at}),
            Verdict::Cycle { preperiod, period } => json!({"kind": "cycle", "preperiod": preperiod, "period": period}),
            Verdict::Extinguished { length } => json!({"kind": "extinguished", "length": length}),
            Verdict::BudgetLines => json!({"kind": "budget_lines"}),
            Verdict::BudgetSteps => json!({"kind": "budget_steps"}),
        };
        json!({
            "operator": self.op.to_string(),
            "field": self.history[0].field().spec().to_string(),
            "budgets": {
                "max_steps": self.budgets.max_steps,
                "max_lines": self.budgets.max_lines,
                "profile_lines": self.budgets.profile_lines,
            },
            "steps": steps,
            "verdict": verdict,
        })
    }

    /// Aligned table: one row per step with line count, H and the `t_k`.
    pub fn to_table(&self) -> String {
        let ks: BTreeSet<usize> = self
            .steps
            .iter()
            .flat_map(|s| s.profile.iter().flat_map(|p| p.t.keys().copied()))
            .collect();
        let mut header = vec!["step".to_string(), "lines".to_string(), "H".to_string(), "H~".to_string()];
        header.extend(ks.iter().map(|k| format!("t{k}")));
        header.push("digest".into());
        let mut rows = vec![header];
        for s in &self.steps {
            let mut row = vec![
                s.index.to_string(),
                s.lines.to_string(),
                s.h.as_ref().map_or("-".into(), |h| h.to_string()),
                s.h.as_ref().map_or("-".into(), |h| format!("{:.4}", h.to_f64().unwrap_or(f64::NAN))),
            ];
            for k in &ks {
                row.push(match &s.profile {
                    Some(p) if p.t(*k) > 0 => p.t(*k).to_string(),
                    Some(_) => String::new(),
                    None => "?".into(),
                });
            }
            row.push(s.digest[..12].to_string());
            rows.push(row);
        }
        let widths: Vec<usize> = (0..rows[0].len())
            .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = format!("operator {}\n", self.op);
        for r in &rows {
            let cells: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        out.push_str(&format!("verdict: {}\n", self.verdict));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{AnyField, Rationals};

    #[test]
    fn parse_operators() {
        let op: Operator = "L{>=2;>=2}".parse().unwrap();
        assert_eq!(op, Operator::lambda_at_least(2, 2));
        let op: Operator = "L{3}".parse().unwrap();
        assert_eq!(op, Operator::lambda_exact(3, 3));
        let op: Operator = "D{2}∘L{2;3}".parse().unwrap();
        assert_eq!(op.to_string(), "D{2}∘L{2;3}");
        assert!("X{2}".parse::<Operator>().is_err());
        assert!("L{1;2}".parse::<Operator>().is_err());
    }

    #[test]
    fn pencil_dies() {
        let pencil = Arrangement::from_ints(Rationals, &[[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, 2, 0]]).unwrap();
        let tr = run_sequence(&Operator::lambda_at_least(2, 2), &pencil, Budgets::default());
        assert_eq!(tr.verdict, Verdict::Extinguished { length: 1 });
    }

    #[test]
    fn quadrilateral_growth() {
        let quad =
            Arrangement::from_ints(Rationals, &[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, -1, 0], [1, 0, -1], [0, 1, -1]])
                .unwrap();
        let tr = run_sequence(&Operator::lambda_at_least(2, 2), &quad, Budgets::steps(2));
        assert_eq!(tr.counts(), vec![6, 9, 25]);
        assert_eq!(tr.verdict, Verdict::BudgetSteps);
        assert!(tr.growth_bound_holds());
        assert!(tr.history[0].is_subset(&tr.history[1]) && tr.history[1].is_subset(&tr.history[2]));
        assert!(tr.to_table().contains("-239/97"));
    }

    #[test]
    fn finite_orbits() {
        let f2 = AnyField::galois(2).unwrap();
        let quad = Arrangement::from_ints(f2, &[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [1, 0, 1], [0, 1, 1]]).unwrap();
        // diagonal points are collinear in characteristic 2
        assert_eq!(orbit_over_finite_field(&Operator::lambda_at_least(2, 3), &quad).unwrap(), (1, 1));
        assert_eq!(orbit_over_finite_field(&Operator::lambda_at_least(3, 2), &quad).unwrap(), (0, 1));
        let two = Arrangement::from_ints(AnyField::galois(2).unwrap(), &[[1, 0, 0], [0, 1, 0]]).unwrap();
        assert_eq!(orbit_over_finite_field(&Operator::lambda_at_least(2, 2), &two).unwrap(), (1, 1));
        let q = Arrangement::from_ints(Rationals, &[[1, 0, 0]]).unwrap();
        assert_eq!(orbit_over_finite_field(&Operator::lambda_at_least(2, 2), &q), Err(Error::InfiniteField));
    }
}
