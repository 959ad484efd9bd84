//! Coloured quivers of Dynkin type A, modelled by (m+2)-angulations of
//! polygons.
//!
//! A coloured quiver carries arrows with colours `0..=m`, symmetric in the
//! sense that arrows `i -> j` of colour `c` are mirrored by arrows `j -> i`
//! of colour `m - c`. Mutation at a vertex ([`quiver::ColouredQuiver::mutate`])
//! generalises ordinary quiver mutation, which is the case `m = 1`.
//!
//! The geometric model ([`geometry`]): a polygon with `N*m + 2` vertices cut
//! into `N` cells of `m + 2` sides each by `N - 1` non-crossing diagonals.
//! Each such angulation induces a coloured quiver on its diagonals, and
//! rotating a diagonal clockwise inside the two cells it bounds corresponds
//! exactly to quiver mutation. Mutation classes of rank-n quivers therefore
//! biject with angulations of the `(n+1)`-cell polygon up to rotation.
//!
//! That bijection is what makes the class count computable three independent
//! ways — a closed formula ([`counting::count_coloured_quivers`]), geometric
//! enumeration ([`geometry::count_rotation_classes`]), and breadth-first
//! search of the mutation graph ([`verify::bfs_mutation_class`]) — and the
//! agreement of all three is checked by [`verify::verify_all`].

pub mod cli;
pub mod counting;
pub mod geometry;
pub mod quiver;
pub mod verify;
