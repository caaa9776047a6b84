//! Exact geometry over `Q^n`.

mod affine;
pub mod linalg;
mod quaternion;
mod sphere;
mod triangle;

pub use affine::{circumcenter, equidistant_affine, triangle_circumcenter, AffineSubspace};
pub use quaternion::{
    quaternion_orthobasis, right_multiply_blocks, scale_by_quaternion, scale_sqrt_q, Quaternion,
};
pub use sphere::{is_distance_realized, rational_point_on_sphere, sphere_points, SpherePointQuery};
pub use triangle::{embed_triangle_q4, TriangleEmbedding, TriangleSq};
