//! Decision procedures over representations: relation checks, invariant
//! vectors and lines, generated-algebra dimension, bounded kernel search,
//! classification of `T_2` extensions and the welded obstruction.

mod extensions;
mod irreducibility;
mod kernel;
pub mod linalg;
mod relations;

pub use extensions::{
    classify_involution_2x2, wt_obstruction_check, EntryWitness, WeldedIndexCheck, WtObstruction,
};
pub use irreducibility::{
    algebra_dimension, check_irreducibility_criterion, common_fixed_vectors, criterion_predicate,
    invariant_line_search, invariant_line_search_side, irreducibility_verdict, InvariantLine,
    IrreducibilityVerdict, Side, Verdict,
};
pub use kernel::kernel_search;
pub use relations::{verify_relations, RelationCheck, RelationReport};
