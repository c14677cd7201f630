//! Exact arithmetic over ℚ: matrices, polynomials, square-free
//! decomposition and real-root isolation.

pub mod matrix;
pub mod poly;
pub mod rational;
pub mod roots;
pub mod squarefree;

pub use matrix::RationalMatrix;
pub use poly::{IntPoly, RationalPoly};
pub use rational::BigRational;
pub use roots::{count_roots_at_least, count_roots_open, isolate_roots, refine, sturm_count, IsolatingInterval};
pub use squarefree::{residual_mod, squarefree, SquarefreeDecomposition, SquarefreePart};
