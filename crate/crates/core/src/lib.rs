//! Exact computations in the category `proj Λ` of finitely generated projective
//! modules over a finite-dimensional path algebra `Λ`: weak kernels and weak
//! cokernels, idempotent splitting, the construction of `n`-cokernels out of
//! `n`-kernels, and global dimensions of `mod Λ` and `mod Λ^op`.

pub mod exactla;
pub mod quiverrep;
pub mod projcat;
pub mod theorem;
pub mod homdim;
pub mod zoo;
