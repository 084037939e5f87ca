from deepind.library.encode.henry_ford import encode_constructor, henry_ford

__all__ = [encode_constructor, henry_ford]
