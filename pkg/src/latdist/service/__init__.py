"""HTTP service layer: pydantic models and the FastAPI app."""
