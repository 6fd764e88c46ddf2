//! Connected, `d`-connected, efficient and Roman domination.

pub mod connected;
pub mod efficient;
pub mod roman;
pub mod trees;

pub use connected::{
    select_connected, solve_connected, solve_connected_driver, solve_d_connected,
    solve_d_connected_driver, ConnectedOptions,
};
pub use efficient::{is_efficient, solve_efficient};
pub use roman::{solve_roman, RomanLabeling, RomanOptions};
pub use trees::{enumerate_trees, AbstractTree};
