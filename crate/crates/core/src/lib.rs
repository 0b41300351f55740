//! Exact arithmetic on monomial ideals: irreducible decompositions,
//! integral closures through Newton polyhedra, v-numbers with witness
//! monomials, and closed-form v-number formulas checked against brute force.
//!
//! ```
//! use monideal::{closure::closure_generators, vnum::v_number, MonomialIdeal, Ring};
//!
//! let ring = Ring::new(&["x", "y"]).unwrap();
//! let i = MonomialIdeal::parse(&ring, "x^2, y^3").unwrap();
//! let bar = closure_generators(&i).unwrap();
//! assert_eq!(bar.to_string(), "(x^2, x*y^2, y^3)");
//! assert_eq!(v_number(&bar).unwrap().v, 2);
//! ```

pub mod budget;
pub mod cli;
pub mod closure;
pub mod decompose;
pub mod error;
pub mod formulas;
pub mod instances;
pub mod io;
pub mod ring;
pub mod verify;
pub mod vnum;

pub use budget::Budget;
pub use decompose::{IrredComponent, MonomialPrime};
pub use error::{Error, Result};
pub use ring::{minimalize, Exp, Monomial, MonomialIdeal, Ring};
