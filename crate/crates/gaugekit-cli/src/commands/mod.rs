pub mod charcmd;
pub mod dual;
pub mod gauge;
pub mod isometry;
pub mod laws;
pub mod ortho;
pub mod render;
pub mod section;
