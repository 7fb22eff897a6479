//! C ABI for the foldenum library.
//!
//! Enumerators are opaque handles created with [`foldenum_enumerator_new`],
//! drained with [`foldenum_enumerator_next`] and released with
//! [`foldenum_enumerator_free`]. All functions report a [`FoldenumStatus`];
//! out parameters are only written on `Ok`. The generated header lives in
//! `include/foldenum.h`.

use std::os::raw::c_char;

use foldenum::{
    count_configurations, fold_sizes, partition_k_m, ClassDistribution, FoldSizes, PartitionKM,
};

/// Result of every C API call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FoldenumStatus {
    /// Success; out parameters are valid.
    Ok = 0,
    /// Inputs violate a precondition (sum mismatch, empty fold, ...).
    InvalidArgument = 1,
    /// A required pointer was null.
    NullPointer = 2,
    /// The caller-provided buffer is too small.
    BufferTooSmall = 3,
    /// The enumerator has no further configurations.
    Finished = 4,
}

/// Opaque streaming enumerator over standardized fold configurations.
pub struct FoldenumEnumerator {
    stream: PartitionKM,
    cells: usize,
}

unsafe fn instance(
    sizes: *const u64,
    num_folds: usize,
    counts: *const u64,
    num_classes: usize,
) -> Result<(FoldSizes, ClassDistribution), FoldenumStatus> {
    if sizes.is_null() || counts.is_null() {
        return Err(FoldenumStatus::NullPointer);
    }
    let sizes = std::slice::from_raw_parts(sizes, num_folds);
    let counts = std::slice::from_raw_parts(counts, num_classes);
    let sizes = FoldSizes::new(sizes.to_vec()).map_err(|_| FoldenumStatus::InvalidArgument)?;
    let counts =
        ClassDistribution::new(counts.to_vec()).map_err(|_| FoldenumStatus::InvalidArgument)?;
    Ok((sizes, counts))
}

/// Write the balanced fold sizes for `total` records and `folds` folds into
/// `out_sizes`, which must hold `folds` values. Sizes are ascending.
///
/// # Safety
/// `out_sizes` must point to at least `out_len` writable `uint64_t`s.
#[no_mangle]
pub unsafe extern "C" fn foldenum_fold_sizes(
    total: u64,
    folds: u64,
    out_sizes: *mut u64,
    out_len: usize,
) -> FoldenumStatus {
    if out_sizes.is_null() {
        return FoldenumStatus::NullPointer;
    }
    let sizes = match fold_sizes(total, folds) {
        Ok(sizes) => sizes,
        Err(_) => return FoldenumStatus::InvalidArgument,
    };
    if out_len < sizes.num_folds() {
        return FoldenumStatus::BufferTooSmall;
    }
    let out = std::slice::from_raw_parts_mut(out_sizes, sizes.num_folds());
    out.copy_from_slice(sizes.sizes());
    FoldenumStatus::Ok
}

/// Write the exact configuration count as a NUL-terminated decimal string.
///
/// On `BufferTooSmall`, `*needed` (when non-null) receives the required
/// capacity including the terminator.
///
/// # Safety
/// `sizes`/`counts` must point to `num_folds`/`num_classes` readable values
/// and `buf` to `buf_len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn foldenum_count_decimal(
    sizes: *const u64,
    num_folds: usize,
    counts: *const u64,
    num_classes: usize,
    buf: *mut c_char,
    buf_len: usize,
    needed: *mut usize,
) -> FoldenumStatus {
    if buf.is_null() {
        return FoldenumStatus::NullPointer;
    }
    let (sizes, counts) = match instance(sizes, num_folds, counts, num_classes) {
        Ok(pair) => pair,
        Err(status) => return status,
    };
    let count = match count_configurations(&sizes, &counts) {
        Ok(count) => count.to_string(),
        Err(_) => return FoldenumStatus::InvalidArgument,
    };
    let required = count.len() + 1;
    if !needed.is_null() {
        *needed = required;
    }
    if buf_len < required {
        return FoldenumStatus::BufferTooSmall;
    }
    let out = std::slice::from_raw_parts_mut(buf.cast::<u8>(), required);
    out[..count.len()].copy_from_slice(count.as_bytes());
    out[count.len()] = 0;
    FoldenumStatus::Ok
}

/// Create an enumerator over all standardized fold configurations for fold
/// sizes `sizes` (ascending) and class counts `counts`.
///
/// # Safety
/// `sizes`/`counts` must point to `num_folds`/`num_classes` readable values;
/// `out` must be a valid pointer. The handle must be released with
/// [`foldenum_enumerator_free`].
#[no_mangle]
pub unsafe extern "C" fn foldenum_enumerator_new(
    sizes: *const u64,
    num_folds: usize,
    counts: *const u64,
    num_classes: usize,
    out: *mut *mut FoldenumEnumerator,
) -> FoldenumStatus {
    if out.is_null() {
        return FoldenumStatus::NullPointer;
    }
    let (sizes, counts) = match instance(sizes, num_folds, counts, num_classes) {
        Ok(pair) => pair,
        Err(status) => return status,
    };
    let stream = match partition_k_m(&sizes, &counts) {
        Ok(stream) => stream,
        Err(_) => return FoldenumStatus::InvalidArgument,
    };
    let handle = Box::new(FoldenumEnumerator {
        stream,
        cells: num_folds * num_classes,
    });
    *out = Box::into_raw(handle);
    FoldenumStatus::Ok
}

/// Write the next configuration row-major into `cells` (fold-major, class
/// within fold). Returns `Finished` when the stream is exhausted.
///
/// # Safety
/// `handle` must come from [`foldenum_enumerator_new`] and not have been
/// freed; `cells` must hold `cells_len` writable `uint64_t`s.
#[no_mangle]
pub unsafe extern "C" fn foldenum_enumerator_next(
    handle: *mut FoldenumEnumerator,
    cells: *mut u64,
    cells_len: usize,
) -> FoldenumStatus {
    if handle.is_null() || cells.is_null() {
        return FoldenumStatus::NullPointer;
    }
    let enumerator = &mut *handle;
    if cells_len < enumerator.cells {
        return FoldenumStatus::BufferTooSmall;
    }
    match enumerator.stream.next() {
        Some(config) => {
            let out = std::slice::from_raw_parts_mut(cells, enumerator.cells);
            out.copy_from_slice(config.cells());
            FoldenumStatus::Ok
        }
        None => FoldenumStatus::Finished,
    }
}

/// Release an enumerator. Passing null is a no-op.
///
/// # Safety
/// `handle` must come from [`foldenum_enumerator_new`] and must not be used
/// afterwards.
#[no_mangle]
pub unsafe extern "C" fn foldenum_enumerator_free(handle: *mut FoldenumEnumerator) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}
