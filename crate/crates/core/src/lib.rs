pub mod analysis;
pub mod catalog;
mod diagram;
pub mod gram;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod steinberg;
pub mod subset;
pub mod sweep;
