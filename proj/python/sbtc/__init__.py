"""Single-bitmap block truncation coding for color images."""

from ._sbtc import (
    FormatError,
    InvalidInput,
    IoError,
    color_mse,
    decode,
    encode,
    encode_gray_block,
    encoded_size,
    header,
    initial_bitmap,
    plan,
    quantize_channels,
    read_image,
    refine_bitmap,
    saturated_mse,
    ssim,
    write_image,
)

__all__ = [
    "FormatError",
    "InvalidInput",
    "IoError",
    "color_mse",
    "decode",
    "encode",
    "encode_gray_block",
    "encoded_size",
    "header",
    "initial_bitmap",
    "plan",
    "quantize_channels",
    "read_image",
    "refine_bitmap",
    "saturated_mse",
    "ssim",
    "write_image",
]
