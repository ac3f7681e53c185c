//! Learn a bijective remapping of an entangled latent space into a proxy space
//! where (a) squared Euclidean distance tracks a supplied perceptual distance and
//! (b) binary attributes are linearly separable, then use the proxy space for
//! attribute editing.
//!
//! The crate is organized around a small set of modules:
//!
//! - [`ndcore`] — dense matrices, small MLPs with exact reverse-mode gradients,
//!   Adam, and a counter-based seeded RNG.
//! - [`flow`] — the invertible coupling-layer model (`T`) with analytic inverse.
//! - [`oracle`] — a deterministic synthetic world standing in for the pretrained
//!   generator/encoder/perceptual/identity stack: it defines ground-truth factors,
//!   labels, a perceptual distance, and identity features.
//! - [`classify`] — linear attribute probes (logistic pretraining, hinge-loss SVM)
//!   and hyperplane directions for editing.
//! - [`losses`] — the training objectives: distance unfolding, attribute
//!   separation, identity preservation, and their weighted total, all with exact
//!   gradients.
//! - [`metrics`] — evaluation: per-attribute accuracy, DCI, 2AFC, and
//!   distance-deviation statistics.
//! - [`editsim`] — hyperplane-normal editing in either space plus quantitative
//!   edit-quality reports.
//! - [`dataio`] — bit-exact binary/CSV/JSON file formats and dataset splitting.

pub mod classify;
pub mod dataio;
pub mod editsim;
pub mod error;
pub mod flow;
pub mod losses;
pub mod metrics;
pub mod ndcore;
pub mod oracle;
pub(crate) mod wire;

pub use classify::{LinearProbe, ProbeBank};
pub use error::{Error, Result};
pub use flow::{CouplingLayer, FlowModel, IdentityMap, LatentMap};
pub use losses::{LossReport, LossWeights, TrainMode};
pub use metrics::MetricsReport;
pub use ndcore::{Matrix, Mlp, Rng};
pub use oracle::ToyWorld;
