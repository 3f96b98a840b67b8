//! Core library for quantum-style electromagnetic transient (EMT) network
//! simulation on a classical statevector simulator.
//!
//! The pipeline has four stages:
//!
//! 1. [`emtp`] — a fixed-step nodal EMT engine: trapezoidal companion models
//!    for R/L/C branches, fixed-admittance switch models, PWM gate signals,
//!    and a dense direct solver that doubles as the exact reference.
//! 2. [`embed`] — padding of the `N`-dimensional nodal system into the
//!    `2^⌈log2 N⌉`-dimensional register space, plus recovery of the physical
//!    solution scale from a unit-norm state.
//! 3. [`pauli`] — projection of real symmetric matrices onto the multi-qubit
//!    Pauli basis, either by direct trace mapping or by the accelerated
//!    Kronecker-factorization route, with circuit-count accounting.
//! 4. [`qsim`] + [`vqls`] — an exact statevector simulator (Ry/CZ/H/S, Pauli
//!    strings, amplitude encoding, Hadamard tests) and the variational linear
//!    solver built on top of it: local cost, parameter-shift gradients,
//!    gradient descent, and the outer error-compensation loop.
//!
//! [`driver`] ties the stages into a time-stepping simulation and [`matgen`]
//! provides the seeded matrix generators used by benchmarks and tests.

pub mod driver;
pub mod embed;
pub mod emtp;
pub mod matgen;
pub mod pauli;
pub mod qsim;
pub mod vqls;
