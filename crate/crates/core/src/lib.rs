pub mod exec;
pub mod http;
pub mod ingest;
pub mod lift;
pub mod query;
pub mod rdf;
pub mod uri;
pub mod validate;

pub use exec::Exec;
