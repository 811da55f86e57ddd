pub mod cli;
pub mod creals;
pub mod pastar;
pub mod pseudo;
pub mod rational;
pub mod subject;
