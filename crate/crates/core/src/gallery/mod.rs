//! Worked example domains with closed-form measures, each paired with an
//! explicit arc-polygon construction.

pub mod balls;
pub mod bowtie;
pub mod ears;
pub mod pinocchio;

pub use balls::{two_balls_example, TwoBallsReport};
pub use bowtie::{loose_bowtie_inner_formula, loose_bowtie_witness, unit_triangle, BowTie, BowTieCheeger, LooseWitness};
pub use ears::{ears_defect, two_ears_measures, two_ears_theta, TwoEars};
pub use pinocchio::{
    g as pinocchio_g, g_monotone_samples, pinocchio_family, pinocchio_measures, self_cheeger_pinocchio,
    solve_pinocchio_theta, verify_self_cheeger, PinocchioShape, SelfCheegerReport,
};
