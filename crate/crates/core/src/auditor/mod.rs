//! Exhaustive manipulation audits over finite declaration grids, a sampled
//! scale-invariance check, and approximation-ratio measurement.
//!
//! Best and worst cases are maxima and minima over the grid's counterpart
//! profiles. A pass is therefore grid-relative unless the grid is the whole
//! domain, and every report says which.

mod bapx;
mod nom;
mod report;
mod si;
mod space;
mod sweep;

use std::collections::BTreeSet;

pub use bapx::{approximation_ratio, measure_bapx, BapxEntry, BapxReport, Ratio};
pub use nom::audit_sp_at;
pub use report::{AuditReport, AuditStats, Condition, Exhibit, Verdict, Witness};
pub use si::{audit_si, check_si_pair, proportional_variant, DEFAULT_SI_TRIALS, SI_MAX_AGENTS};
pub use space::{DeclarationSpace, SpaceKind};
pub use sweep::{budget_from_env, AuditOptions, Auditor, BUDGET_ENV, DEFAULT_BUDGET};

use crate::error::Result;
use crate::game::{Declaration, Partition};
use crate::mechanisms::MechanismSpec;

/// Coalitions `decl.agent` can end up in when the others range over the space.
pub fn coal_set(
    spec: &MechanismSpec,
    decl: &Declaration,
    space: &DeclarationSpace,
    opts: AuditOptions,
) -> Result<BTreeSet<Vec<usize>>> {
    Auditor::new(spec, space, opts)?.coal_set(decl)
}

/// Partitions the mechanism can return when the others range over the space.
pub fn out_set(
    spec: &MechanismSpec,
    decl: &Declaration,
    space: &DeclarationSpace,
    opts: AuditOptions,
) -> Result<BTreeSet<Partition>> {
    Auditor::new(spec, space, opts)?.out_set(decl)
}

pub fn audit_nom(spec: &MechanismSpec, space: &DeclarationSpace, opts: AuditOptions) -> Result<AuditReport> {
    Auditor::new(spec, space, opts)?.audit_nom()
}

pub fn audit_sp(spec: &MechanismSpec, space: &DeclarationSpace, opts: AuditOptions) -> Result<AuditReport> {
    Auditor::new(spec, space, opts)?.audit_sp()
}
