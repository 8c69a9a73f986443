# Pydantic schemas for reports and structured CLI output
