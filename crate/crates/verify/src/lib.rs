//! Machine verification of statements about partial Π-property over a
//! corpus of permutation groups.

pub mod context;
pub mod corpus;
pub mod implications;
pub mod metamorphic;
pub mod oracles;
pub mod report;
pub mod runner;
pub mod statements;

pub use corpus::Manifest;
pub use report::{CorpusReport, Status, VerifierReport};
pub use runner::{run_corpus, RunOptions, Suite};
pub use statements::StatementId;
