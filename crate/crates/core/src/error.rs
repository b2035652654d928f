use thiserror::Error;

fn at(line: &Option<usize>) -> String {
    match line {
        Some(l) => format!("line {l}: "),
        None => String::new(),
    }
}

/// Failures while reading or constructing a [`Graph`](crate::Graph).
#[derive(Debug, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{}self-loop at vertex {vertex}", at(.line))]
    SelfLoop { line: Option<usize>, vertex: u64 },
    #[error("{}duplicate edge {{{u}, {v}}}", at(.line))]
    DuplicateEdge { line: Option<usize>, u: u64, v: u64 },
    #[error("{}edge weight {weight} is below 1", at(.line))]
    InvalidWeight { line: Option<usize>, weight: i64 },
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {edge} out of range for a graph with {m} edges")]
    EdgeOutOfRange { edge: usize, m: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("{elements} elements exceed the exhaustive search budget of {budget}")]
    BudgetExceeded { elements: usize, budget: usize },
    #[error("contract violation: {0}")]
    Contract(String),
}
