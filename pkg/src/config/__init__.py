"""Shared configuration defaults."""
