"""FastAPI service wrapping the workbench core."""
