//! Presentations of the twin, virtual twin and welded twin groups, words in
//! their generators, and a normal form for the twin group.

mod normal_form;
mod presentation;
mod word;

pub use normal_form::{enumerate_t_elements, normal_form_t, words_equal_in_t};
pub use presentation::{build_presentation, Presentation, Relation, RelationTag};
pub use word::{GroupKind, Letter, TwinWord};
