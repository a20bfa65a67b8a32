pub mod blanchfield;
pub mod io;
pub mod laurent;
pub mod matrix;
pub mod obstruct;
pub mod polymat;
pub mod seifert;
pub mod table;
pub mod verify;
