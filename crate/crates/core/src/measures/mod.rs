//! Domain-agnostic measures: Gini sparsity, Shannon entropy, variance,
//! attribute and distance diversity, and log10 dimensionality helpers.

mod dimensionality;
mod diversity;
mod entropy;
mod gini;
mod histogram;
mod result;

pub use dimensionality::{gtc_power, log10_biguint, log10_product, Cardinality};
pub use diversity::{attribute_diversity, distance_diversity, variance_diversity, Metric};
pub use entropy::{normalized_entropy, shannon_entropy, ProbDist, SUM_TOLERANCE};
pub use gini::{gini, ValueArray};
pub use histogram::{histogram, histogram_bytes, Histogram};
pub use result::{Direction, MeasureFamily, MeasureResult, Provenance};
