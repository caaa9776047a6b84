//! Exact rational arithmetic and the sum-of-squares primitives every
//! construction depends on.

mod numtheory;
mod qvec;
mod rational;

pub use numtheory::{
    decompose_four_squares, decompose_three_squares, decompose_two_squares, gauss_obstruction,
    is_square, is_sum_three_squares, is_sum_two_squares, isqrt, prime_factors,
    rational_sum_of_squares, square_free_decompose, square_free_part, to_desk_scale,
    DESK_SCALE_LIMIT,
};
pub use qvec::QVec;
pub use rational::Rational;
