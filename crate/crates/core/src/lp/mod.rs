//! Embedded linear programming: a bounded-variable revised simplex with dual
//! values, plus branch-and-bound for integer programs.
//!
//! Both formulations in this crate are solved through this module, so the
//! whole pipeline is deterministic and free of external solver dependencies.
//! The simplex keeps an explicit basis inverse and prices with Dantzig's
//! rule, falling back to Bland's rule when the objective stalls, which
//! guarantees termination.

mod mip;
mod simplex;

pub use mip::{solve_mip, solve_mip_with, MipOptions, MipSolution, MipStatus};
pub use simplex::{solve_lp, solve_lp_capped};

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::math;

/// Constraint sense of a row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

impl Relation {
    fn symbol(&self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub relation: Relation,
    pub rhs: f64,
    /// Sparse coefficients as (variable, value) pairs.
    pub coeffs: Vec<(usize, f64)>,
}

/// A minimization problem over bounded variables. Integer variables are
/// marked per-variable; the LP relaxation simply ignores the flags.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct LinearProgram {
    pub costs: Vec<f64>,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    pub integer: Vec<bool>,
    pub rows: Vec<Row>,
}

impl LinearProgram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn num_vars(&self) -> usize {
        self.costs.len()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Adds a variable and returns its index.
    pub fn add_var(&mut self, cost: f64, lower: f64, upper: f64, integer: bool) -> usize {
        self.costs.push(cost);
        self.lower.push(lower);
        self.upper.push(upper);
        self.integer.push(integer);
        self.costs.len() - 1
    }

    pub fn add_row(&mut self, relation: Relation, rhs: f64, coeffs: &[(usize, f64)]) {
        self.rows.push(Row {
            relation,
            rhs,
            coeffs: coeffs.to_vec(),
        });
    }

    /// Structural well-formedness: index ranges, ordered finite bounds,
    /// finite coefficients.
    pub fn validate(&self) -> Result<(), LpError> {
        let n = self.num_vars();
        if self.lower.len() != n || self.upper.len() != n || self.integer.len() != n {
            return Err(LpError::ShapeMismatch);
        }
        for v in 0..n {
            if !(self.costs[v].is_finite()) {
                return Err(LpError::BadCost { var: v });
            }
            if self.lower[v].is_nan()
                || self.upper[v].is_nan()
                || self.lower[v] > self.upper[v]
                || self.lower[v] == f64::INFINITY
                || self.upper[v] == f64::NEG_INFINITY
            {
                return Err(LpError::BadBounds { var: v });
            }
        }
        for (r, row) in self.rows.iter().enumerate() {
            if !row.rhs.is_finite() {
                return Err(LpError::BadRhs { row: r });
            }
            for &(v, a) in &row.coeffs {
                if v >= n {
                    return Err(LpError::BadIndex { row: r, var: v });
                }
                if !a.is_finite() {
                    return Err(LpError::BadCoeff { row: r, var: v });
                }
            }
        }
        Ok(())
    }

    /// Plain-text dump, one constraint per line, for external cross-checks:
    ///
    /// ```text
    /// min 2 x0 + 1 x1
    /// r0: 1 x0 + 1 x1 >= 1
    /// 0 <= x0 <= inf
    /// 0 <= x1 <= 1 int
    /// ```
    pub fn dump(&self) -> String {
        let mut out = String::new();
        out.push_str("min");
        let mut first = true;
        for (v, &c) in self.costs.iter().enumerate() {
            if c != 0.0 {
                let _ = write!(out, "{} {} x{}", if first { "" } else { " +" }, c, v);
                first = false;
            }
        }
        if first {
            out.push_str(" 0");
        }
        out.push('\n');
        for (r, row) in self.rows.iter().enumerate() {
            let _ = write!(out, "r{}:", r);
            if row.coeffs.is_empty() {
                out.push_str(" 0");
            }
            for (pos, &(v, a)) in row.coeffs.iter().enumerate() {
                let _ = write!(out, "{} {} x{}", if pos == 0 { "" } else { " +" }, a, v);
            }
            let _ = writeln!(out, " {} {}", row.relation.symbol(), row.rhs);
        }
        for v in 0..self.num_vars() {
            let _ = writeln!(
                out,
                "{} <= x{} <= {}{}",
                self.lower[v],
                v,
                self.upper[v],
                if self.integer[v] { " int" } else { "" }
            );
        }
        out
    }

    /// Objective value of a point (no feasibility check).
    pub fn objective_value(&self, x: &[f64]) -> f64 {
        self.costs.iter().zip(x).map(|(c, v)| c * v).sum()
    }

    /// Maximum violation of rows and bounds at a point.
    pub fn max_violation(&self, x: &[f64]) -> f64 {
        let mut worst = 0.0f64;
        for row in &self.rows {
            let lhs: f64 = row.coeffs.iter().map(|&(v, a)| a * x[v]).sum();
            let viol = match row.relation {
                Relation::Le => lhs - row.rhs,
                Relation::Ge => row.rhs - lhs,
                Relation::Eq => math::abs(lhs - row.rhs),
            };
            worst = worst.max(viol);
        }
        for v in 0..self.num_vars() {
            worst = worst.max(self.lower[v] - x[v]).max(x[v] - self.upper[v]);
        }
        worst
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpError {
    ShapeMismatch,
    BadBounds { var: usize },
    BadCost { var: usize },
    BadRhs { row: usize },
    BadCoeff { row: usize, var: usize },
    BadIndex { row: usize, var: usize },
}

impl core::fmt::Display for LpError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            LpError::ShapeMismatch => write!(f, "bound/cost/integrality arrays disagree in length"),
            LpError::BadBounds { var } => write!(f, "variable x{var} has invalid bounds"),
            LpError::BadCost { var } => write!(f, "variable x{var} has a non-finite cost"),
            LpError::BadRhs { row } => write!(f, "row {row} has a non-finite right-hand side"),
            LpError::BadCoeff { row, var } => {
                write!(f, "row {row} has a non-finite coefficient on x{var}")
            }
            LpError::BadIndex { row, var } => {
                write!(f, "row {row} references unknown variable x{var}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for LpError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
    IterationLimit,
}

/// Result of an LP solve. Duals follow the convention that makes
/// `objective = rhs . duals + bound terms` hold at optimality: for a
/// minimization, `>=` rows carry nonnegative duals and `<=` rows
/// nonpositive ones.
#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution {
    pub status: LpStatus,
    /// Primal values, one per variable (meaningful when `Optimal`).
    pub x: Vec<f64>,
    /// One dual value per row.
    pub duals: Vec<f64>,
    /// Reduced costs, one per variable.
    pub reduced_costs: Vec<f64>,
    pub objective: f64,
    pub iterations: u64,
}

impl LpSolution {
    /// Dual objective `b'y + l'max(d,0) + u'min(d,0)`, the certificate
    /// counterpart of the primal objective.
    pub fn dual_objective(&self, lp: &LinearProgram) -> f64 {
        let mut total = 0.0;
        for (row, &y) in lp.rows.iter().zip(&self.duals) {
            total += row.rhs * y;
        }
        for v in 0..lp.num_vars() {
            let d = self.reduced_costs[v];
            if d > 0.0 && lp.lower[v].is_finite() {
                total += d * lp.lower[v];
            } else if d < 0.0 && lp.upper[v].is_finite() {
                total += d * lp.upper[v];
            }
        }
        total
    }
}

/// Why an optimality certificate failed; see [`check_certificates`].
#[derive(Debug, Clone, PartialEq)]
pub enum CertificateError {
    NotOptimal(LpStatus),
    PrimalInfeasible { violation: f64 },
    DualInfeasible { var: usize, violation: f64 },
    ReducedCostInconsistent { var: usize, violation: f64 },
    WeakDuality { primal: f64, dual: f64 },
    ComplementarySlackness { row: usize, dual: f64, slack: f64 },
    InteriorReducedCost { var: usize, reduced_cost: f64 },
}

impl core::fmt::Display for CertificateError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CertificateError::NotOptimal(s) => write!(f, "solution status is {s:?}, not optimal"),
            CertificateError::PrimalInfeasible { violation } => {
                write!(f, "primal violation {violation}")
            }
            CertificateError::DualInfeasible { var, violation } => {
                write!(f, "dual sign violation {violation} on x{var}")
            }
            CertificateError::ReducedCostInconsistent { var, violation } => {
                write!(f, "reduced cost of x{var} off by {violation} from c - A'y")
            }
            CertificateError::WeakDuality { primal, dual } => {
                write!(f, "objectives disagree: primal {primal}, dual {dual}")
            }
            CertificateError::ComplementarySlackness { row, dual, slack } => {
                write!(f, "row {row}: dual {dual} with slack {slack}")
            }
            CertificateError::InteriorReducedCost { var, reduced_cost } => {
                write!(f, "x{var} strictly between bounds with reduced cost {reduced_cost}")
            }
        }
    }
}

/// Verifies the optimality certificate of a solved LP against the original
/// data: primal feasibility and dual sign feasibility within `1e-7`, strong
/// duality within `1e-6` relative, and complementary slackness within `1e-7`.
pub fn check_certificates(lp: &LinearProgram, sol: &LpSolution) -> Result<(), CertificateError> {
    const FEAS: f64 = 1e-7;
    if sol.status != LpStatus::Optimal {
        return Err(CertificateError::NotOptimal(sol.status));
    }

    let primal_violation = lp.max_violation(&sol.x);
    if primal_violation > FEAS {
        return Err(CertificateError::PrimalInfeasible {
            violation: primal_violation,
        });
    }

    // Reduced costs must be consistent with the duals and dual-feasible:
    // d_j >= 0 unless x_j can move up from its lower bound, etc.
    for v in 0..lp.num_vars() {
        let mut d = lp.costs[v];
        for (r, row) in lp.rows.iter().enumerate() {
            for &(var, a) in &row.coeffs {
                if var == v {
                    d -= sol.duals[r] * a;
                }
            }
        }
        let drift = math::abs(d - sol.reduced_costs[v]);
        if drift > FEAS * (1.0 + math::abs(lp.costs[v])) {
            return Err(CertificateError::ReducedCostInconsistent {
                var: v,
                violation: drift,
            });
        }
        let at_lower = sol.x[v] <= lp.lower[v] + FEAS;
        let at_upper = sol.x[v] >= lp.upper[v] - FEAS;
        if d < -FEAS && !at_upper {
            return Err(CertificateError::DualInfeasible { var: v, violation: -d });
        }
        if d > FEAS && !at_lower {
            return Err(CertificateError::InteriorReducedCost { var: v, reduced_cost: d });
        }
    }

    // Row duals of the wrong sign, or nonzero duals on slack rows.
    for (r, row) in lp.rows.iter().enumerate() {
        let y = sol.duals[r];
        let lhs: f64 = row.coeffs.iter().map(|&(v, a)| a * sol.x[v]).sum();
        let slack = match row.relation {
            Relation::Le => {
                if y > FEAS {
                    return Err(CertificateError::ComplementarySlackness { row: r, dual: y, slack: row.rhs - lhs });
                }
                row.rhs - lhs
            }
            Relation::Ge => {
                if y < -FEAS {
                    return Err(CertificateError::ComplementarySlackness { row: r, dual: y, slack: lhs - row.rhs });
                }
                lhs - row.rhs
            }
            Relation::Eq => 0.0,
        };
        if math::abs(y) > FEAS && math::abs(slack) > FEAS * (1.0 + math::abs(row.rhs)) {
            return Err(CertificateError::ComplementarySlackness { row: r, dual: y, slack });
        }
    }

    let dual_obj = sol.dual_objective(lp);
    if math::abs(sol.objective - dual_obj) > 1e-6 * (1.0 + math::abs(sol.objective)) {
        return Err(CertificateError::WeakDuality {
            primal: sol.objective,
            dual: dual_obj,
        });
    }
    Ok(())
}
