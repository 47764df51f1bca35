//! Acyclic orientations of complete multipartite graphs.
//!
//! Every acyclic orientation of a complete multipartite graph can be written
//! down as a string: repeatedly delete a source and record which part it came
//! from. The resulting code is a multiset permutation of the part digits, the
//! correspondence is a bijection, and it turns orientation questions into
//! string questions:
//!
//! * counting orientations is counting codes ([`counting::count_a`]),
//! * counting non-isomorphic orientations divides out equal-size part swaps
//!   ([`counting::count_b`], [`codec::canonicalize`]),
//! * orientations with a directed spanning tree are codes whose first two
//!   digits differ ([`counting::count_c`]),
//! * longest directed paths are runs of equal digits
//!   ([`codec::longest_path_stats`]),
//! * labelled counts reduce to Smirnov words (no equal adjacent letters) and
//!   poly-Bernoulli numbers ([`counting::count_labelled`],
//!   [`counting::smirnov_x`], [`counting::poly_bernoulli`]).
//!
//! The [`oracle`] module holds independent brute-force routes (orientation
//! sweeps, isomorphism grouping, word filters, truncated generating series,
//! chromatic interpolation) used to cross-validate every closed formula at
//! small sizes.

pub mod code;
pub mod codec;
pub mod counting;
pub mod enumerate;
pub mod error;
pub mod oracle;
pub mod orientation;
pub mod partition;

pub use code::{Code, Digit, RunPartition};
pub use counting::BigCount;
pub use error::{Error, Result};
pub use orientation::{Orientation, Vertex};
pub use partition::PartitionSpec;
