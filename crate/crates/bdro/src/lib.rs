//! Bayesian distributionally robust optimization over KL ambiguity sets.
//!
//! The crate fits a conjugate Bayesian model to observed data, samples
//! parameters from the posterior, and minimizes the posterior average of the
//! worst-case expected cost over a Kullback–Leibler ball centered at the
//! parametric scenario distribution. Alongside the robust solver it ships the
//! standard alternatives it is benchmarked against (posterior averaging,
//! empirical SAA, empirical KL-DRO, Wasserstein-DRO), three data-driven rules
//! for the ambiguity radius, and a replicated out-of-sample evaluation
//! harness that produces mean–variance frontiers.
//!
//! A narrative guide with runnable examples lives in `book/`; its chapters are
//! compiled as doc-tests through the [`guide`] module.

pub mod calibration;
pub mod cost;
pub mod distributions;
pub mod evaluation;
pub mod guide;
pub mod posterior;
pub mod robust;
pub mod solvers;
pub mod stream;

mod opt;

pub use posterior::{BayesModel, DataSet, ScenarioMatrix, Theta};
pub use stream::RandomStream;
