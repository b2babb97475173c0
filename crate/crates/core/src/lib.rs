//! Enveloping commutative Rota-Baxter algebras of Zinbiel and
//! postcommutative algebras, the free commutative Rota-Baxter algebra, and
//! Yang-Baxter checks, all over exact rationals.

pub mod cli;
pub mod env_post;
pub mod env_pre;
pub mod expr;
pub mod free;
pub mod presentation;
pub mod quotient;
pub mod scalar;
pub mod shuffle;
pub mod verify;
pub mod ybe;
