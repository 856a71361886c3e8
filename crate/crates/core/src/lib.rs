//! Eliahou semigroups: numerical semigroups with negative Eliahou number.
//!
//! The crate is layered bottom-up:
//!
//! * [`fraction`] and [`farey`]: exact rationals and h-Farey intervals.
//! * [`sumset`]: h-fold sumsets and B_h sets.
//! * [`semigroup`] and [`classify`]: explicit semigroups, their parameters
//!   and a brute-force classification; this is the reference oracle.
//! * [`family`]: the parametric families `S(h, a/b, Delta, tau, m)`, their
//!   short/split criteria and closed-form Eliahou numbers.
//! * [`explorer`] and [`search`]: exhaustive search of the semigroup tree
//!   with a bitfield state and branch pruning, split into parallel tasks.
//! * [`report`] and [`render`]: result rows, family attribution,
//!   classification tables and critical-interval diagrams.
//! * [`verify`]: seeded self-checks.

pub mod bits;
pub mod classify;
pub mod error;
pub mod explorer;
pub mod family;
pub mod farey;
pub mod fraction;
pub mod render;
pub mod report;
pub mod search;
pub mod semigroup;
pub mod sumset;
pub mod verify;

pub use classify::{classify, detect_h, ClassificationRecord};
pub use error::{Error, Result};
pub use explorer::{ExplorerState, Walk};
pub use family::{
    closed_form_e, closed_form_k, construct, criteria, e0_forms, family_ex1, family_ex2, hat_params, inflate_m,
    shift_numerator, BoundedFamily, ClosedForm, CriteriaVerdict, FamilyParams, PredictedFamily,
};
pub use farey::{farey_cover, farey_predecessor, phi, phi_prime, FareyInterval};
pub use fraction::Fraction;
pub use render::{render_critical_interval, Format};
pub use search::{
    postprocess_extend, run_search, Completeness, GenBound, SearchConfig, SearchOutput, SearchStats, SearchTask,
};
pub use report::{attribute, read_rows, Attribution, Class, ResultRow, Table};
pub use semigroup::{semigroup_from, EliahouRecord, Params, Semigroup};
pub use sumset::{canonical_bh_set, hfold_sumset, is_bh_set, multichoose, IntSet};
