from .text_utils import normalize_text, normalize_family_name

__all__ = ['normalize_text', 'normalize_family_name']
