pub mod compute;
pub mod constants;
pub mod scan;
pub mod verify;
pub mod zeros;
