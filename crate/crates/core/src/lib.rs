pub mod fpgroup;
pub mod permgroup;
pub mod transposition;
pub mod dihedral_algebra;
pub mod shape_enum;
