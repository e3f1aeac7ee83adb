from fmachina.schemas.document_schema import document_schema, morphism_file_schema

__all__ = ['document_schema', 'morphism_file_schema']
