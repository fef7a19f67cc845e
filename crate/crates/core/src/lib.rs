//! Compositional distributional semantics on pregroup grammars.
//!
//! The crate is organised as a pipeline: [`pregroup`] decides whether a
//! sequence of word types reduces to a sentence type and produces the cup
//! wiring as a witness; [`diagram`] turns words plus a witness into a string
//! diagram and rewrites it (word expansions, spider fusion, yanking);
//! [`semantics`] evaluates diagrams as dense real tensors over a choice of
//! vector spaces; [`models`] implements closed-form sentence composition
//! models over word vectors; [`embeddings`] and [`evaldata`] supply the word
//! vectors and the human-judged sentence-pair data for rank-correlation
//! evaluation. [`convexrel`] is a finite, grid-based model of the same
//! composition story over regions of quality domains instead of vectors.

pub mod convexrel;
pub mod diagram;
pub mod embeddings;
pub mod evaldata;
pub mod models;
pub mod pregroup;
pub mod semantics;
pub mod tensor;
