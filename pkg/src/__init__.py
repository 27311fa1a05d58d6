from pathlib import Path

project_root = Path(__file__).parent.parent
config_dir = project_root / 'src' / 'config'
default_config_path = config_dir / 'defaults.yml'
