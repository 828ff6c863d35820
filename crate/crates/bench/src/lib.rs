//! Shared benchmark fixtures.

use sigrb_core::rb::{RbConfig, RewriteOrder};
use sigrb_core::signature::OrderKind;

pub fn rb_config(order: OrderKind, update_syz: bool, pc: bool) -> RbConfig {
    RbConfig {
        order,
        rewrite: RewriteOrder::Rat,
        update_syz,
        product_criterion: pc,
        prefilter: false,
        criteria_off: false,
    }
}
