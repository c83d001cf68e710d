from .rotation_experiments import rotation_experiments_pipeline

__all__ = ["rotation_experiments_pipeline"]
