"""Data models using Pydantic for type safety and validation."""
