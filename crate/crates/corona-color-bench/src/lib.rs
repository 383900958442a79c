//! Shared fixtures for the benchmark suite.

use corona_color::{Coloring, Graph};

pub fn nine_path_with_eq4() -> (Graph, Coloring) {
    let g = Graph::path(9).expect("path");
    let c = Coloring::new(4, vec![1, 2, 3, 4, 1, 2, 3, 1, 4]).expect("coloring");
    (g, c)
}
