pub mod bch;
pub mod bitframe;
pub mod protocols;

pub use bitframe::{BeaconMode, FieldWindow, Frame, FrameError, FrameFormat};
pub use protocols::{BeaconIdentity, BeaconReport, BeaconSpec, Position, Protocol};
