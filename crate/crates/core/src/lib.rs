pub mod corpus;
pub mod cumulants;
pub mod error;
pub mod graphpoly;
pub mod input;
pub mod llt;
pub mod lltgraphs;
pub mod ring;
pub mod scan;
pub mod shapes;
pub mod special;
pub mod symfunc;
pub mod tableaux;
pub mod verify;
