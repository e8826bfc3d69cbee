//! Core, encouragement, PMAS and 3-player analyses built on the solution
//! functions.

mod balancing;
mod core_set;
pub mod elimination;
mod encourage;
mod pmas;
mod three_player;

pub use balancing::{check_balancing_inequality, BalancedWeighting, BalancingCheck};
pub use core_set::{
    core_by_elimination, core_nonempty, in_core, CoreCertificateSource, CoreNonemptiness, CoreReport, CoreViolation,
    CORE_ELIMINATION_CAP,
};
pub use encourage::{encourages_on, EncouragementReport, EncouragementViolation};
pub use pmas::{induced_scheme, is_pmas, is_pmas_with, AllocationScheme, PmasCheck, PmasReport, PmasViolation};
pub use three_player::{
    construct_core_element_3p, core_nonempty_3p, is_convex_3p_closed_form, three_player_stats, ConstructionCase,
    CoreConstruction3p, ThreePlayerStats,
};
