use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{parse_polynomial, Polynomial, VarNames};
use crate::error::{Error, Result};
use crate::gama::CapitalBudgeting;
use crate::graph::Graph;
use crate::graver::Objective;
use crate::reformulate::ConstraintSystem;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bounds {
    pub lower: Vec<Option<i64>>,
    pub upper: Vec<Option<i64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "snake_case")]
pub enum ObjectiveSpec {
    Linear(Vec<i64>),
    /// Polynomial text over `x0, x1, ...`.
    Polynomial(String),
    CapitalBudgeting(CapitalBudgeting),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphSpec {
    pub vertices: usize,
    /// `[u, v]` or `[u, v, w]`, zero-based.
    pub edges: Vec<Vec<i64>>,
}

/// Problem document: every section is optional.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    #[serde(rename = "A", default, skip_serializing_if = "Option::is_none")]
    pub a: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<i64>>,
    /// Shorthand for `0 <= x <= 1`.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub binary: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Bounds>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub objective: Option<ObjectiveSpec>,
    /// Rows read as `A_i x <= b_i`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub inequalities: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, serde_json::Value>,
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<Self> {
        let p: ProblemFile = serde_json::from_str(text).map_err(|e| Error::parse(e.line().max(1), e.column().max(1), e.to_string()))?;
        p.validate()?;
        Ok(p)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("problem files serialise");
        s.push('\n');
        s
    }

    pub fn num_vars(&self) -> Option<usize> {
        if let Some(a) = &self.a {
            if let Some(row) = a.first() {
                return Some(row.len());
            }
        }
        if let Some(bd) = &self.bounds {
            return Some(bd.lower.len());
        }
        match &self.objective {
            Some(ObjectiveSpec::Linear(c)) => Some(c.len()),
            Some(ObjectiveSpec::CapitalBudgeting(f)) => Some(f.len()),
            _ => None,
        }
    }

    fn validate(&self) -> Result<()> {
        let n = self.num_vars();
        let mismatch = |what: &str, expected: usize, found: usize| {
            Error::Validation(format!("{what} has {found} entries but there are {expected} variables"))
        };
        match (&self.a, &self.b) {
            (Some(a), Some(b)) => {
                if a.len() != b.len() {
                    return Err(Error::Validation(format!(
                        "A has {} rows but b has {} entries",
                        a.len(),
                        b.len()
                    )));
                }
                for (i, row) in a.iter().enumerate() {
                    if Some(row.len()) != n {
                        return Err(Error::Validation(format!(
                            "row {i} of A has {} columns but row 0 has {}",
                            row.len(),
                            n.unwrap_or(0)
                        )));
                    }
                }
                for &r in &self.inequalities {
                    if r >= a.len() {
                        return Err(Error::Validation(format!("inequality row {r} but A has {} rows", a.len())));
                    }
                }
            }
            (None, None) => {
                if !self.inequalities.is_empty() {
                    return Err(Error::Validation("inequalities without constraints".into()));
                }
            }
            _ => return Err(Error::Validation("A and b must be given together".into())),
        }
        if self.binary && self.bounds.is_some() {
            return Err(Error::Validation("give either binary or bounds, not both".into()));
        }
        if let (Some(n), Some(bd)) = (n, &self.bounds) {
            if bd.lower.len() != n {
                return Err(mismatch("bounds.lower", n, bd.lower.len()));
            }
            if bd.upper.len() != n {
                return Err(mismatch("bounds.upper", n, bd.upper.len()));
            }
        }
        if let Some(n) = n {
            match &self.objective {
                Some(ObjectiveSpec::Linear(c)) if c.len() != n => return Err(mismatch("objective.linear", n, c.len())),
                Some(ObjectiveSpec::CapitalBudgeting(f)) if f.len() != n => {
                    return Err(mismatch("objective.capital_budgeting", n, f.len()))
                }
                Some(ObjectiveSpec::CapitalBudgeting(f)) => {
                    CapitalBudgeting::new(f.mu.clone(), f.sigma.clone(), f.epsilon)?;
                }
                Some(ObjectiveSpec::Polynomial(text)) => {
                    parse_polynomial(text, &VarNames::indexed(n))?;
                }
                _ => {}
            }
        }
        if let Some(g) = &self.graph {
            self.graph_of(g)?;
        }
        Ok(())
    }

    fn graph_of(&self, g: &GraphSpec) -> Result<Graph> {
        let mut out = Graph::new(g.vertices);
        for (k, e) in g.edges.iter().enumerate() {
            let (u, v, w) = match e[..] {
                [u, v] => (u, v, 1),
                [u, v, w] => (u, v, w),
                _ => return Err(Error::Validation(format!("edge {k} needs 2 or 3 entries"))),
            };
            if u < 0 || v < 0 {
                return Err(Error::Validation(format!("edge {k} has a negative vertex")));
            }
            out.add_edge(u as usize, v as usize, w)?;
        }
        Ok(out)
    }

    pub fn graph(&self) -> Result<Graph> {
        match &self.graph {
            Some(g) => self.graph_of(g),
            None => Err(Error::Validation("problem has no graph section".into())),
        }
    }

    /// The constraint system with the polynomial objective when there is one.
    pub fn system(&self) -> Result<ConstraintSystem> {
        let (a, b) = match (&self.a, &self.b) {
            (Some(a), Some(b)) => (a.clone(), b.clone()),
            _ => return Err(Error::Validation("problem has no constraints".into())),
        };
        let n = self.num_vars().unwrap_or(0);
        let (lower, upper) = match (&self.bounds, self.binary) {
            (Some(bd), _) => (bd.lower.clone(), bd.upper.clone()),
            (None, true) => (vec![Some(0); n], vec![Some(1); n]),
            (None, false) => (vec![Some(0); n], vec![None; n]),
        };
        let mut s = ConstraintSystem::new(a, b, lower, upper)?.with_inequalities(&self.inequalities)?;
        if let Some(p) = self.polynomial_objective()? {
            s = s.with_objective(p)?;
        }
        Ok(s)
    }

    pub fn polynomial_objective(&self) -> Result<Option<Polynomial>> {
        let n = self.num_vars().unwrap_or(0);
        match &self.objective {
            Some(ObjectiveSpec::Linear(c)) => {
                let terms = c
                    .iter()
                    .enumerate()
                    .map(|(j, &cj)| (crate::algebra::Monomial::var(n, j), crate::algebra::rational(cj)));
                Ok(Some(Polynomial::from_terms(n, terms)?))
            }
            Some(ObjectiveSpec::Polynomial(t)) => Ok(Some(parse_polynomial(t, &VarNames::indexed(n))?)),
            _ => Ok(None),
        }
    }

    pub fn linear_cost(&self) -> Result<Vec<i64>> {
        match &self.objective {
            Some(ObjectiveSpec::Linear(c)) => Ok(c.clone()),
            None => Ok(vec![0; self.num_vars().unwrap_or(0)]),
            _ => Err(Error::Validation("this command needs a linear objective".into())),
        }
    }

    /// Objective as an evaluation oracle.
    pub fn oracle(&self) -> Result<Box<dyn Objective>> {
        if let Some(ObjectiveSpec::CapitalBudgeting(f)) = &self.objective {
            return Ok(Box::new(f.clone()));
        }
        match self.polynomial_objective()? {
            Some(p) => Ok(Box::new(p)),
            None => Err(Error::Validation("problem has no objective".into())),
        }
    }
}
