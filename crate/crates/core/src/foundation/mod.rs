//! Exact scalars and the basic combinatorial objects everything else is built on.

pub mod partition;
pub mod qpoly;
pub mod word;

pub use partition::{normalize_to_partition, Composition, Partition};
pub use qpoly::{rational, rational_int, QPoly, Rational};
pub use word::{
    all_words, descent_set, descents_by, distinct_permutation_class, words_of_content, IntVector,
    Word,
};
