pub mod arcsets;
pub mod gon;
pub mod hom;
pub mod ncp;
pub mod oracle;
pub mod torsion;
